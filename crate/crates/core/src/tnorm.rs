//! Continuous t-norms on `[0,1]`, represented symbolically as ordinal sums.
//!
//! A t-norm is stored as a list of intervals with disjoint interiors, each
//! carrying either the Łukasiewicz or the product structure; outside all
//! pieces the operation is minimum. Interval endpoints are exactly the
//! idempotent elements, so Gödel is the empty list and an Archimedean t-norm
//! is a single piece spanning `[0,1]`.

use crate::error::{Error, Result};

/// Comparison tolerance for closed-form real arithmetic.
pub const REAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Lukasiewicz,
    Product,
}

/// One ordinal-sum summand on `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub kind: PieceKind,
    pub lo: f64,
    pub hi: f64,
}

/// A continuous t-norm as an ordinal sum of Łukasiewicz and product pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct TNorm {
    pieces: Vec<Piece>,
}

impl TNorm {
    /// Builds a t-norm from pieces, sorting them and rejecting overlaps.
    pub fn new(mut pieces: Vec<Piece>) -> Result<Self> {
        for p in &pieces {
            if !(0.0..=1.0).contains(&p.lo) || !(0.0..=1.0).contains(&p.hi) {
                return Err(Error::Structure(format!(
                    "piece [{}, {}] leaves [0,1]",
                    p.lo, p.hi
                )));
            }
            if p.lo + REAL_TOL >= p.hi {
                return Err(Error::Structure(format!(
                    "piece [{}, {}] is degenerate",
                    p.lo, p.hi
                )));
            }
        }
        pieces.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        for w in pieces.windows(2) {
            if w[0].hi > w[1].lo + REAL_TOL {
                return Err(Error::Structure(format!(
                    "pieces [{}, {}] and [{}, {}] overlap",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        Ok(TNorm { pieces })
    }

    /// The Gödel t-norm (minimum).
    pub fn godel() -> Self {
        TNorm { pieces: Vec::new() }
    }

    /// The product t-norm.
    pub fn product() -> Self {
        TNorm {
            pieces: vec![Piece {
                kind: PieceKind::Product,
                lo: 0.0,
                hi: 1.0,
            }],
        }
    }

    /// The Łukasiewicz t-norm.
    pub fn lukasiewicz() -> Self {
        TNorm {
            pieces: vec![Piece {
                kind: PieceKind::Lukasiewicz,
                lo: 0.0,
                hi: 1.0,
            }],
        }
    }

    /// Łukasiewicz on `[0, 1/2]`, product on `[1/2, 1]`.
    pub fn luk_then_product() -> Self {
        TNorm {
            pieces: vec![
                Piece {
                    kind: PieceKind::Lukasiewicz,
                    lo: 0.0,
                    hi: 0.5,
                },
                Piece {
                    kind: PieceKind::Product,
                    lo: 0.5,
                    hi: 1.0,
                },
            ],
        }
    }

    /// Product on `[0, 1/2]`, Łukasiewicz on `[1/2, 1]`.
    pub fn product_then_luk() -> Self {
        TNorm {
            pieces: vec![
                Piece {
                    kind: PieceKind::Product,
                    lo: 0.0,
                    hi: 0.5,
                },
                Piece {
                    kind: PieceKind::Lukasiewicz,
                    lo: 0.5,
                    hi: 1.0,
                },
            ],
        }
    }

    /// Łukasiewicz, product, Łukasiewicz on the thirds of `[0,1]`.
    pub fn three_piece_mix() -> Self {
        TNorm {
            pieces: vec![
                Piece {
                    kind: PieceKind::Lukasiewicz,
                    lo: 0.0,
                    hi: 1.0 / 3.0,
                },
                Piece {
                    kind: PieceKind::Product,
                    lo: 1.0 / 3.0,
                    hi: 2.0 / 3.0,
                },
                Piece {
                    kind: PieceKind::Lukasiewicz,
                    lo: 2.0 / 3.0,
                    hi: 1.0,
                },
            ],
        }
    }

    /// A single Łukasiewicz piece on `[1/4, 3/4]`, minimum elsewhere.
    /// The continuum analogue of [`mv3_block_chain`](crate::quantale::mv3_block_chain).
    pub fn luk_block() -> Self {
        TNorm {
            pieces: vec![Piece {
                kind: PieceKind::Lukasiewicz,
                lo: 0.25,
                hi: 0.75,
            }],
        }
    }

    /// Fixture t-norms by name, as accepted by the command line.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "godel" | "minimum" => Some(Self::godel()),
            "product" => Some(Self::product()),
            "lukasiewicz" => Some(Self::lukasiewicz()),
            "luk-product" => Some(Self::luk_then_product()),
            "product-luk" => Some(Self::product_then_luk()),
            "mixed3" => Some(Self::three_piece_mix()),
            "luk-block" => Some(Self::luk_block()),
            _ => None,
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Only `0` and `1` are idempotent: a single piece spanning `[0,1]`.
    pub fn is_archimedean(&self) -> bool {
        self.pieces.len() == 1
            && self.pieces[0].lo.abs() < REAL_TOL
            && (self.pieces[0].hi - 1.0).abs() < REAL_TOL
    }

    /// `c` is idempotent iff it lies in no piece interior.
    pub fn is_idempotent(&self, c: f64) -> bool {
        !self
            .pieces
            .iter()
            .any(|p| c > p.lo + REAL_TOL && c < p.hi - REAL_TOL)
    }

    /// The idempotents enclosing `c`: the endpoints of its piece when `c` is
    /// not idempotent, and `(c, c)` otherwise.
    pub fn idempotent_bounds(&self, c: f64) -> (f64, f64) {
        assert!((0.0..=1.0).contains(&c), "c = {c} outside [0,1]");
        match self
            .pieces
            .iter()
            .find(|p| c > p.lo + REAL_TOL && c < p.hi - REAL_TOL)
        {
            Some(p) => (p.lo, p.hi),
            None => (c, c),
        }
    }

    fn piece_spanning(&self, lo_val: f64, hi_val: f64) -> Option<&Piece> {
        self.pieces
            .iter()
            .find(|p| p.lo <= lo_val + REAL_TOL && hi_val <= p.hi + REAL_TOL)
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        check_unit_interval(x)?;
        check_unit_interval(y)?;
        Ok(self.ev(x, y))
    }

    pub(crate) fn ev(&self, x: f64, y: f64) -> f64 {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        match self.piece_spanning(lo, hi) {
            Some(p) => {
                let w = p.hi - p.lo;
                let u = (x - p.lo) / w;
                let v = (y - p.lo) / w;
                let s = match p.kind {
                    PieceKind::Lukasiewicz => (u + v - 1.0).max(0.0),
                    PieceKind::Product => u * v,
                };
                p.lo + w * s
            }
            None => lo,
        }
    }

    /// The residual `x → y`, the largest `q` with `x & q ≤ y`.
    ///
    /// Within a piece the Łukasiewicz and product closed forms apply; when an
    /// idempotent separates `y` from `x` the value collapses to `y`.
    pub fn imp(&self, x: f64, y: f64) -> Result<f64> {
        check_unit_interval(x)?;
        check_unit_interval(y)?;
        Ok(self.im(x, y))
    }

    pub(crate) fn im(&self, x: f64, y: f64) -> f64 {
        if x <= y + REAL_TOL {
            return 1.0;
        }
        match self.piece_spanning(y, x) {
            Some(p) => match p.kind {
                PieceKind::Lukasiewicz => y + (p.hi - x),
                PieceKind::Product => p.lo + (p.hi - p.lo) * (y - p.lo) / (x - p.lo),
            },
            None => y,
        }
    }
}

fn check_unit_interval(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{x} is outside [0,1]")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fixtures() -> Vec<TNorm> {
        vec![
            TNorm::godel(),
            TNorm::product(),
            TNorm::lukasiewicz(),
            TNorm::luk_then_product(),
            TNorm::product_then_luk(),
            TNorm::three_piece_mix(),
            TNorm::luk_block(),
        ]
    }

    #[test]
    fn basic_closed_forms() {
        let p = TNorm::product();
        let l = TNorm::lukasiewicz();
        let g = TNorm::godel();
        assert!((p.imp(0.5, 0.25).unwrap() - 0.5).abs() < REAL_TOL);
        assert!((l.imp(0.7, 0.4).unwrap() - 0.7).abs() < REAL_TOL);
        assert!((g.imp(0.3, 0.5).unwrap() - 1.0).abs() < REAL_TOL);
        assert!((l.eval(0.7, 0.4).unwrap() - 0.1).abs() < REAL_TOL);
        assert!((p.eval(0.5, 0.5).unwrap() - 0.25).abs() < REAL_TOL);
    }

    #[test]
    fn idempotent_bounds_follow_the_pieces() {
        let t = TNorm::luk_then_product();
        assert_eq!(t.idempotent_bounds(0.25), (0.0, 0.5));
        assert_eq!(t.idempotent_bounds(0.7), (0.5, 1.0));
        assert_eq!(t.idempotent_bounds(0.5), (0.5, 0.5));
        let g = TNorm::godel();
        assert_eq!(g.idempotent_bounds(0.4), (0.4, 0.4));
    }

    #[test]
    fn overlapping_pieces_are_rejected() {
        let bad = TNorm::new(vec![
            Piece {
                kind: PieceKind::Product,
                lo: 0.0,
                hi: 0.6,
            },
            Piece {
                kind: PieceKind::Lukasiewicz,
                lo: 0.5,
                hi: 1.0,
            },
        ]);
        assert!(matches!(bad, Err(Error::Structure(_))));
        assert!(TNorm::eval(&TNorm::godel(), 1.2, 0.0).is_err());
        assert!(TNorm::imp(&TNorm::godel(), 0.1, -0.3).is_err());
    }

    #[test]
    fn idempotents_collapse_multiplication_to_minimum() {
        // x & y = x ∧ y whenever x ≤ p ≤ y for an idempotent p, sampled on a grid
        let n = 41;
        for t in fixtures() {
            for i in 0..n {
                let p = i as f64 / (n - 1) as f64;
                if !t.is_idempotent(p) {
                    continue;
                }
                for j in 0..=i {
                    for k in i..n {
                        let x = j as f64 / (n - 1) as f64;
                        let y = k as f64 / (n - 1) as f64;
                        assert!(
                            (t.ev(x, y) - x.min(y)).abs() < REAL_TOL,
                            "x={x} p={p} y={y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn implication_matches_grid_residuation() {
        // independent oracle: x → y ≈ max { q on the grid | x & q ≤ y }
        let n = 101;
        let tol = 1.5 / n as f64;
        for t in fixtures() {
            for i in 0..n {
                for j in 0..n {
                    let x = i as f64 / (n - 1) as f64;
                    let y = j as f64 / (n - 1) as f64;
                    let mut best = 0.0f64;
                    for k in 0..n {
                        let q = k as f64 / (n - 1) as f64;
                        if t.ev(x, q) <= y + REAL_TOL {
                            best = best.max(q);
                        }
                    }
                    let closed = t.im(x, y);
                    assert!(
                        (closed - best).abs() <= tol,
                        "x={x} y={y}: closed {closed} vs grid {best}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn tnorm_laws(x in 0.0f64..=1.0, y in 0.0f64..=1.0, z in 0.0f64..=1.0) {
            for t in fixtures() {
                let xy = t.ev(x, y);
                prop_assert!((xy - t.ev(y, x)).abs() < REAL_TOL);
                prop_assert!((t.ev(xy, z) - t.ev(x, t.ev(y, z))).abs() < 1e-7);
                prop_assert!((t.ev(x, 1.0) - x).abs() < REAL_TOL);
                prop_assert!(xy <= x.min(y) + REAL_TOL);
                if y <= z {
                    prop_assert!(xy <= t.ev(x, z) + REAL_TOL);
                }
            }
        }

        #[test]
        fn residuation_adjunction_sampled(x in 0.0f64..=1.0, y in 0.0f64..=1.0, q in 0.0f64..=1.0) {
            for t in fixtures() {
                // q ≤ x → y  ⟺  x & q ≤ y, up to tolerance
                let imp = t.im(x, y);
                if q <= imp - REAL_TOL {
                    prop_assert!(t.ev(x, q) <= y + 1e-7);
                }
                if t.ev(x, q) <= y - REAL_TOL {
                    prop_assert!(q <= imp + 1e-7);
                }
            }
        }

        #[test]
        fn idempotent_crossing_collapses_implication(x in 0.0f64..=1.0, y in 0.0f64..=1.0) {
            // y → x = x whenever x < p ≤ y for some idempotent p
            for t in fixtures() {
                if y > x {
                    let crossed = t
                        .pieces()
                        .iter()
                        .all(|p| !(p.lo <= x + REAL_TOL && y <= p.hi + REAL_TOL));
                    if crossed {
                        prop_assert!((t.im(y, x) - x).abs() < REAL_TOL);
                    }
                }
            }
        }
    }
}
