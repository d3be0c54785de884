//! Decoder for isomorphism signatures of 3-dimensional triangulations.
//!
//! Characters encode 6-bit values (`a-z`, `A-Z`, `0-9`, `+`, `-`). The
//! signature lists the tetrahedron count, one action per unglued facet in
//! canonical order (boundary, join to a fresh tetrahedron, join to an earlier
//! one), then destinations and gluing permutations of the joins.

use crate::error::TriangulationError;
use crate::perm::Perm4;

/// Gluing of one facet: partner tetrahedron and vertex map into it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

fn char_value(c: u8) -> Option<usize> {
    Some(match c {
        b'a'..=b'z' => (c - b'a') as usize,
        b'A'..=b'Z' => (c - b'A') as usize + 26,
        b'0'..=b'9' => (c - b'0') as usize + 52,
        b'+' => 62,
        b'-' => 63,
        _ => return None,
    })
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn value(&mut self) -> Result<usize, TriangulationError> {
        let c = *self.bytes.get(self.pos).ok_or_else(|| err("signature too short"))?;
        self.pos += 1;
        char_value(c).ok_or_else(|| err(&format!("invalid character `{}`", c as char)))
    }

    /// Little-endian integer spread over `n` characters.
    fn int(&mut self, n: usize) -> Result<usize, TriangulationError> {
        let mut v = 0usize;
        for i in 0..n {
            v |= self.value()? << (6 * i);
        }
        Ok(v)
    }
}

fn err(msg: &str) -> TriangulationError {
    TriangulationError::IsoSig(msg.to_string())
}

/// Decodes a signature of a closed-up (boundaryless) triangulation into the
/// gluing table indexed by tetrahedron and facet.
pub fn decode(sig: &str) -> Result<Vec<[Gluing; 4]>, TriangulationError> {
    let mut r = Reader { bytes: sig.as_bytes(), pos: 0 };
    let first = r.value()?;
    let (n, width) = if first < 63 {
        (first, 1)
    } else {
        let width = r.value()?;
        if width == 0 || width > 5 {
            return Err(err("bad size width"));
        }
        (r.int(width)?, width)
    };
    if n == 0 {
        return Err(err("empty triangulation"));
    }

    let mut actions = Vec::new();
    let mut facets = 0;
    while facets < 4 * n {
        let v = r.value()?;
        for k in 0..3 {
            let a = (v >> (2 * k)) & 3;
            if facets >= 4 * n {
                if a != 0 {
                    return Err(err("trailing facet action"));
                }
                continue;
            }
            match a {
                0 => facets += 1,
                1 | 2 => facets += 2,
                _ => return Err(err("invalid facet action")),
            }
            actions.push(a);
        }
    }
    if facets != 4 * n {
        return Err(err("facet count mismatch"));
    }

    let joins = actions.iter().filter(|&&a| a == 2).count();
    let dests: Vec<usize> = (0..joins).map(|_| r.int(width)).collect::<Result<_, _>>()?;
    let perms: Vec<Perm4> = (0..joins)
        .map(|_| r.value().and_then(|v| Perm4::lex(v).ok_or_else(|| err("bad permutation index"))))
        .collect::<Result<_, _>>()?;
    if r.pos != r.bytes.len() {
        return Err(err("trailing characters"));
    }

    let mut table: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; n];
    let mut next_unused = 1;
    let mut act = actions.into_iter();
    let mut join = 0;
    for t in 0..n {
        for f in 0..4 {
            if table[t][f].is_some() {
                continue;
            }
            match act.next().ok_or_else(|| err("too few facet actions"))? {
                0 => return Err(TriangulationError::Boundary),
                1 => {
                    if next_unused >= n {
                        return Err(err("join to nonexistent tetrahedron"));
                    }
                    let g = Gluing { tet: next_unused, perm: Perm4::IDENTITY };
                    table[t][f] = Some(g);
                    table[next_unused][f] = Some(Gluing { tet: t, perm: Perm4::IDENTITY });
                    next_unused += 1;
                }
                _ => {
                    let (d, p) = (dests[join], perms[join]);
                    join += 1;
                    let g = p.apply(f);
                    if d >= next_unused || table[d][g].is_some() || (d == t && g == f) {
                        return Err(err("invalid join"));
                    }
                    table[t][f] = Some(Gluing { tet: d, perm: p });
                    table[d][g] = Some(Gluing { tet: t, perm: p.inverse() });
                }
            }
        }
    }
    if act.next().is_some() {
        return Err(err("unused facet actions"));
    }
    table
        .into_iter()
        .map(|row| {
            let mut out = [Gluing { tet: 0, perm: Perm4::IDENTITY }; 4];
            for (o, g) in out.iter_mut().zip(row) {
                *o = g.ok_or(TriangulationError::Boundary)?;
            }
            Ok(out)
        })
        .collect()
}
