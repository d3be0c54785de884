use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, expected n x (n+1)")]
    WrongShape { rows: usize, cols: usize },
    #[error("integer overflow in Smith normal form")]
    Overflow,
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("malformed census string `{0}`")]
    Malformed(String),
    #[error("invalid isomorphism signature: {0}")]
    IsoSig(String),
    #[error("angle digits must be 0, 1 or 2: `{0}`")]
    Angles(String),
    #[error("{digits} angle digits for {n} tetrahedra")]
    AngleCount { digits: usize, n: usize },
    #[error("triangulation has boundary faces")]
    Boundary,
    #[error("inconsistent gluing at tetrahedron {tet} face {face}")]
    BadGluing { tet: usize, face: usize },
    #[error("not taut: angle sum around edge {edge} is {pis} pi")]
    NotTaut { edge: usize, pis: usize },
    #[error("taut structure admits no transverse coorientation")]
    NotTransverse,
    #[error("triangulation is not orientable")]
    NonOrientable,
    #[error("not veering: no consistent edge colouring")]
    NotVeering,
    #[error("structured triangulation text, line {line}: {msg}")]
    Format { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComputeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error("vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("vector is not a 1-cycle in the dual graph (tetrahedron {tet})")]
    NotCycle { tet: usize },
    #[error("weights are not a nonzero nonnegative solution of the branch equations")]
    NotCarried,
    #[error("cusp index {index} out of range ({cusps} cusps)")]
    CuspIndex { index: usize, cusps: usize },
    #[error("face Laurents do not factor through the target cover")]
    NoInducedMap,
    #[error("edge {0} is the top diagonal of no tetrahedron")]
    NoDiagonalPairing(usize),
}
