//! Polynomial invariants of transverse taut and veering ideal triangulations.
//!
//! A census string `isoSig_angles` is decoded into an ideal triangulation with
//! a taut angle structure. From there [`TransverseTaut`] recovers the
//! coorientation, [`Veering`] the edge colouring, and the invariants are
//! computed over exact Laurent polynomial rings.

pub mod boundary;
pub mod cover;
pub mod equivalence;
pub mod error;
pub mod flowgraph;
pub mod gcd;
pub mod invariants;
pub mod io;
pub mod isosig;
pub mod laurent;
pub mod lmatrix;
pub mod perm;
pub mod scan;
pub mod snf;
pub mod transverse;
pub mod triangulation;

pub use boundary::{boundary_cycles, cusps, teichmueller_polynomial, verify_carried, CuspStructure};
pub use cover::{induced_map, rank_of_cover, triangulation_cover, FaceLaurents};
pub use error::{AlgebraError, ComputeError, TriangulationError};
pub use flowgraph::{flow_graph, graphs_isomorphic, FlowGraph};
pub use gcd::{lp_gcd, lp_gcd_all};
pub use invariants::{lower_veering_polynomial, taut_polynomial, upper_veering_polynomial, Track};
pub use laurent::{LaurentPoly, Monomial};
pub use lmatrix::LaurentMatrix;
pub use scan::{census_scan, ScanRow};
pub use snf::{smith_normal_form, IntMatrix, SnfResult};
pub use transverse::{Colour, TransverseTaut, Veering};
pub use triangulation::{parse_census_string, TautStructure, Triangulation};
