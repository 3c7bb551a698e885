//! Brute-force decision of `D` for 2x2 matrices with integer entries.
//!
//! `A D B` holds iff some `D` satisfies `R(D) = R(A)` and `C(D) = C(B)`. The
//! oracle searches a fixed grid of candidate bridges, testing span equality
//! with its own small-integer arithmetic so that it shares no code with the
//! library's decision procedure.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use trop_core::{TropMatrix, TropScalar};

/// `None` is `-inf`.
pub type Entry = Option<i64>;
pub type Small = [[Entry; 2]; 2];
type Vec2 = [Entry; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Br {
    Neg,
    Fin(i64),
    Pos,
}

fn bracket(x: Vec2, y: Vec2) -> Br {
    let mut best = Br::Pos;
    for i in 0..2 {
        if let Some(xi) = x[i] {
            let v = match y[i] {
                None => Br::Neg,
                Some(yi) => Br::Fin(yi - xi),
            };
            best = best.min(v);
        }
    }
    best
}

fn scale(c: Br, g: Vec2) -> Vec2 {
    match c {
        Br::Fin(c) => g.map(|e| e.map(|v| v + c)),
        // `Pos` only arises for the zero vector.
        Br::Neg | Br::Pos => [None, None],
    }
}

fn member(gens: &[Vec2; 2], a: Vec2) -> bool {
    let mut acc = [None, None];
    for &g in gens {
        let s = scale(bracket(g, a), g);
        acc = [acc[0].max(s[0]), acc[1].max(s[1])];
    }
    acc == a
}

fn same_span(g: &[Vec2; 2], h: &[Vec2; 2]) -> bool {
    h.iter().all(|&v| member(g, v)) && g.iter().all(|&v| member(h, v))
}

fn rows(m: &Small) -> [Vec2; 2] {
    *m
}

fn cols(m: &Small) -> [Vec2; 2] {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

/// Every 2x2 matrix with entries in `values`.
pub fn all_matrices(values: &[Entry]) -> Vec<Small> {
    let mut out = Vec::new();
    for &a in values {
        for &b in values {
            for &c in values {
                for &d in values {
                    out.push([[a, b], [c, d]]);
                }
            }
        }
    }
    out
}

/// `-inf` followed by `lo..=hi`.
pub fn entry_values(lo: i64, hi: i64) -> Vec<Entry> {
    std::iter::once(None).chain((lo..=hi).map(Some)).collect()
}

/// Candidate bridges, with their row and column generators.
pub struct DOracle {
    grid: Vec<Small>,
    memo: Mutex<HashMap<(Small, bool), Class>>,
}

/// Indices of grid matrices sharing a row (or column) space with a query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class(Vec<u64>);

impl Class {
    pub fn meets(&self, other: &Class) -> Option<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .find(|(_, (a, b))| *a & *b != 0)
            .map(|(w, (a, b))| w * 64 + (a & b).trailing_zeros() as usize)
    }
}

impl DOracle {
    /// Candidates are all matrices with entries in `{-inf} ∪ lo..=hi`.
    pub fn new(lo: i64, hi: i64) -> Self {
        DOracle {
            grid: all_matrices(&entry_values(lo, hi)),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The grid over `-4..=4`, built once.
    pub fn standard() -> &'static DOracle {
        static ORACLE: OnceLock<DOracle> = OnceLock::new();
        ORACLE.get_or_init(|| DOracle::new(-4, 4))
    }

    fn class(&self, m: &Small, by_rows: bool) -> Class {
        let key = (*m, by_rows);
        if let Some(c) = self.memo.lock().expect("memo").get(&key) {
            return c.clone();
        }
        let side: fn(&Small) -> [Vec2; 2] = if by_rows { rows } else { cols };
        let target = side(m);
        let mut bits = vec![0u64; self.grid.len().div_ceil(64)];
        for (i, d) in self.grid.iter().enumerate() {
            if same_span(&side(d), &target) {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        let c = Class(bits);
        self.memo.lock().expect("memo").insert(key, c.clone());
        c
    }

    /// Candidates `D` with `R(D) = R(A)`.
    pub fn row_class(&self, a: &Small) -> Class {
        self.class(a, true)
    }

    /// Candidates `D` with `C(D) = C(B)`.
    pub fn col_class(&self, b: &Small) -> Class {
        self.class(b, false)
    }

    /// A bridge from the grid, if one exists.
    pub fn bridge(&self, a: &Small, b: &Small) -> Option<Small> {
        self.row_class(a)
            .meets(&self.col_class(b))
            .map(|i| self.grid[i])
    }

    pub fn grid_matrix(&self, i: usize) -> Small {
        self.grid[i]
    }
}

/// Reads a 2x2 matrix of integers and `-inf`.
pub fn to_small(m: &TropMatrix) -> Option<Small> {
    if m.rows() != 2 || m.cols() != 2 {
        return None;
    }
    let entry = |i, j| -> Option<Entry> {
        match m.get(i, j) {
            TropScalar::NegInf => Some(None),
            TropScalar::Finite(q) if q.is_integer() => i64::try_from(q.to_integer()).ok().map(Some),
            _ => None,
        }
    };
    Some([[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]])
}

pub fn from_small(m: &Small) -> TropMatrix {
    let s = |e: Entry| e.map_or(TropScalar::NegInf, TropScalar::int);
    TropMatrix::from_rows(
        m.iter()
            .map(|r| r.iter().map(|&e| s(e)).collect())
            .collect(),
    )
    .expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_spans() {
        let g = [[Some(0), None], [None, Some(0)]];
        assert!(member(&g, [Some(3), None]));
        assert!(member(&g, [Some(-1), Some(5)]));
        let h = [[Some(0), Some(0)], [Some(0), Some(0)]];
        assert!(!member(&h, [Some(0), Some(1)]));
        assert!(member(&h, [Some(2), Some(2)]));
        assert!(member(&h, [None, None]));
    }

    #[test]
    fn bridges_for_simple_pairs() {
        let o = DOracle::new(-2, 2);
        let id: Small = [[Some(0), None], [None, Some(0)]];
        let flat: Small = [[Some(0), Some(0)], [Some(0), Some(0)]];
        let d = o.bridge(&id, &id).unwrap();
        assert!(same_span(&rows(&d), &rows(&id)) && same_span(&cols(&d), &cols(&id)));
        assert!(o.bridge(&id, &flat).is_none());
        assert!(o.bridge(&flat, &flat).is_some());
    }

    #[test]
    fn conversion() {
        let m = TropMatrix::parse_rows("0 -inf; -3 4").unwrap();
        assert_eq!(from_small(&to_small(&m).unwrap()), m);
        assert!(to_small(&TropMatrix::parse_rows("1/2 0; 0 0").unwrap()).is_none());
    }
}
