//! Finite commutative unital quantales.
//!
//! A quantale here is a finite complete lattice carrying a commutative,
//! associative multiplication `&` with unit `k` that distributes over joins.
//! On a finite carrier distributivity over arbitrary joins reduces to binary
//! joins plus the empty join (`x & 0 = 0`), which is what `validate` checks.

use crate::error::{Error, Result};
use crate::lattice;
use crate::report::ValidationReport;

/// Index of an element in a quantale's canonical element order.
pub type Elem = usize;

/// A finite quantale given by explicit tables.
///
/// The order of `elements` fixes the canonical iteration order; every
/// derived enumeration in this crate is deterministic because of it.
/// Derived lookup tables (joins, meets, implication, bounds) are built
/// eagerly on construction and are only meaningful when [`validate`]
/// reports no violations.
///
/// [`validate`]: FiniteQuantale::validate
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuantale {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
    mul: Vec<Vec<Elem>>,
    unit: Elem,
    join: Vec<Vec<Elem>>,
    meet: Vec<Vec<Elem>>,
    imp: Vec<Vec<Elem>>,
    bottom: Elem,
    top: Elem,
}

/// Derived structural facts about a valid quantale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaleProperties {
    /// The unit is the top element.
    pub is_integral: bool,
    /// The multiplication is binary meet.
    pub is_frame: bool,
    /// Elements with `p & p = p`, in canonical order.
    pub idempotents: Vec<Elem>,
}

impl FiniteQuantale {
    /// Builds a quantale from raw tables, checking shape only.
    ///
    /// Axioms are not checked here; call [`validate`](Self::validate).
    pub fn from_tables(
        elements: Vec<String>,
        leq: Vec<Vec<bool>>,
        mul: Vec<Vec<Elem>>,
        unit: Elem,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Structure("empty element list".into()));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(Error::Structure(format!("duplicate element name {a:?}")));
            }
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Structure(format!("leq table is not {n}×{n}")));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::Structure(format!("mul table is not {n}×{n}")));
        }
        if let Some(&bad) = mul.iter().flatten().find(|&&e| e >= n) {
            return Err(Error::Structure(format!("mul entry {bad} out of range")));
        }
        if unit >= n {
            return Err(Error::Structure(format!("unit index {unit} out of range")));
        }
        let t = lattice::tables(&leq);
        let mut q = FiniteQuantale {
            elements,
            leq,
            mul,
            unit,
            join: t.join,
            meet: t.meet,
            imp: Vec::new(),
            bottom: t.bottom,
            top: t.top,
        };
        q.imp = q.build_implication();
        Ok(q)
    }

    /// Resolves element names against this quantale's table.
    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.elements.iter().position(|e| e == name)
    }

    fn build_implication(&self) -> Vec<Vec<Elem>> {
        let n = self.len();
        // p → r = ⋁ { q | p & q ≤ r }
        (0..n)
            .map(|p| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .filter(|&q| self.leq[self.mul[p][q]][r])
                            .fold(self.bottom, |acc, q| self.join[acc][q])
                    })
                    .collect()
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elems(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.elements[e]
    }

    pub fn names(&self) -> &[String] {
        &self.elements
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a][b]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a][b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a][b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a][b]
    }

    /// The implication (residual) `p → r`, the largest `q` with `p & q ≤ r`.
    pub fn imp(&self, p: Elem, r: Elem) -> Elem {
        self.imp[p][r]
    }

    pub fn join_all(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(self.bottom, |a, b| self.join[a][b])
    }

    pub fn meet_all(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(self.top, |a, b| self.meet[a][b])
    }

    /// Checks every quantale axiom, reporting each failure with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new();
        let names = &self.elements;
        lattice::check_partial_order(&self.leq, names, &mut rep);
        lattice::check_lattice(&self.leq, names, &mut rep);
        let lattice_ok = rep.is_valid();

        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.mul[a][b] != self.mul[b][a] {
                    rep.push(
                        "commutativity",
                        format!(
                            "{} & {} = {} but {} & {} = {}",
                            names[a],
                            names[b],
                            names[self.mul[a][b]],
                            names[b],
                            names[a],
                            names[self.mul[b][a]]
                        ),
                    );
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.mul[self.mul[a][b]][c];
                    let r = self.mul[a][self.mul[b][c]];
                    if l != r {
                        rep.push(
                            "associativity",
                            format!(
                                "({} & {}) & {} = {} ≠ {} = {} & ({} & {})",
                                names[a],
                                names[b],
                                names[c],
                                names[l],
                                names[r],
                                names[a],
                                names[b],
                                names[c]
                            ),
                        );
                    }
                }
            }
        }
        for a in 0..n {
            if self.mul[self.unit][a] != a {
                rep.push(
                    "unit",
                    format!(
                        "k & {} = {}, expected {}",
                        names[a], names[self.mul[self.unit][a]], names[a]
                    ),
                );
            }
        }
        // Join distributivity only makes sense over an actual lattice.
        if lattice_ok {
            for a in 0..n {
                if self.mul[a][self.bottom] != self.bottom {
                    rep.push(
                        "zero",
                        format!("{} & 0 = {} ≠ 0", names[a], names[self.mul[a][self.bottom]]),
                    );
                }
                for b in 0..n {
                    for c in 0..n {
                        let l = self.mul[a][self.join[b][c]];
                        let r = self.join[self.mul[a][b]][self.mul[a][c]];
                        if l != r {
                            rep.push(
                                "join-distributivity",
                                format!(
                                    "{} & ({} ∨ {}) = {} ≠ {} = ({} & {}) ∨ ({} & {})",
                                    names[a],
                                    names[b],
                                    names[c],
                                    names[l],
                                    names[r],
                                    names[a],
                                    names[b],
                                    names[a],
                                    names[c]
                                ),
                            );
                        }
                    }
                }
            }
        }
        rep
    }

    /// Computes integrality, frameness and the idempotent set exhaustively.
    pub fn properties(&self) -> QuantaleProperties {
        let is_integral = self.unit == self.top;
        let is_frame = self
            .elems()
            .all(|a| self.elems().all(|b| self.mul[a][b] == self.meet[a][b]));
        let idempotents = self.elems().filter(|&p| self.mul[p][p] == p).collect();
        QuantaleProperties {
            is_integral,
            is_frame,
            idempotents,
        }
    }

    /// True when the underlying order is a total order.
    pub fn is_chain(&self) -> bool {
        self.elems()
            .all(|a| self.elems().all(|b| self.leq[a][b] || self.leq[b][a]))
    }

    /// For a chain quantale: the greatest idempotent below `x` and the least
    /// idempotent above `x`. Idempotent `x` yields `(x, x)`.
    pub fn idempotent_bounds(&self, x: Elem) -> (Elem, Elem) {
        if self.mul[x][x] == x {
            return (x, x);
        }
        let lo = self
            .elems()
            .filter(|&p| self.mul[p][p] == p && self.leq[p][x])
            .fold(self.bottom, |a, b| self.join[a][b]);
        let hi = self
            .elems()
            .filter(|&p| self.mul[p][p] == p && self.leq[x][p])
            .fold(self.top, |a, b| self.meet[a][b]);
        (lo, hi)
    }

    /// Replaces one multiplication entry, preserving everything else.
    /// Used by mutation tests; the result usually fails `validate`.
    pub fn with_mul_entry(&self, a: Elem, b: Elem, v: Elem) -> Self {
        let mut q = self.clone();
        q.mul[a][b] = v;
        q
    }
}

fn chain_leq(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
}

fn chain_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                format!("{}/{}", i, n - 1)
            }
        })
        .collect()
}

/// The two-element Boolean quantale `({0,1}, ∧, k = 1)`.
pub fn boolean() -> FiniteQuantale {
    godel_chain(2).expect("2-chain")
}

/// The `n`-element chain `{0, 1/(n−1), …, 1}` with minimum as multiplication.
pub fn godel_chain(n: usize) -> Result<FiniteQuantale> {
    if n < 2 {
        return Err(Error::Structure(format!("chain needs n ≥ 2, got {n}")));
    }
    let mul = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
    FiniteQuantale::from_tables(chain_names(n), chain_leq(n), mul, n - 1)
}

/// The `n`-element chain with the truncated Łukasiewicz sum
/// `x & y = max(0, x + y − 1)` in units of `1/(n−1)`.
pub fn mv_chain(n: usize) -> Result<FiniteQuantale> {
    if n < 2 {
        return Err(Error::Structure(format!("chain needs n ≥ 2, got {n}")));
    }
    let mul = (0..n)
        .map(|i| (0..n).map(|j| (i + j).saturating_sub(n - 1)).collect())
        .collect();
    FiniteQuantale::from_tables(chain_names(n), chain_leq(n), mul, n - 1)
}

/// A five-element chain `0 < p < m < q < 1` whose middle block `{p, m, q}`
/// carries the three-element Łukasiewicz structure while everything else
/// multiplies as minimum. The block sits strictly above the bottom, so the
/// chain is an exact finite model of an ordinal sum whose Łukasiewicz piece
/// starts above 0.
pub fn mv3_block_chain() -> FiniteQuantale {
    let names = ["0", "p", "m", "q", "1"].map(String::from).to_vec();
    let block = 1..=3;
    let mul = (0..5usize)
        .map(|i| {
            (0..5usize)
                .map(|j| {
                    if block.contains(&i) && block.contains(&j) {
                        1 + (i - 1 + j - 1).saturating_sub(2)
                    } else {
                        i.min(j)
                    }
                })
                .collect()
        })
        .collect();
    FiniteQuantale::from_tables(names, chain_leq(5), mul, 4).expect("block chain")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_and_builders_validate() {
        assert!(boolean().validate().is_valid());
        for n in 2..=6 {
            assert!(godel_chain(n).unwrap().validate().is_valid(), "godel {n}");
            assert!(mv_chain(n).unwrap().validate().is_valid(), "mv {n}");
        }
        assert!(mv3_block_chain().validate().is_valid());
        assert!(godel_chain(1).is_err());
        assert!(mv_chain(0).is_err());
    }

    #[test]
    fn mv_chain_2_is_boolean() {
        let b = boolean();
        let m = mv_chain(2).unwrap();
        assert_eq!(b.names(), m.names());
        for a in 0..2 {
            for c in 0..2 {
                assert_eq!(b.mul(a, c), m.mul(a, c));
            }
        }
    }

    #[test]
    fn broken_unit_is_rejected_with_witness() {
        // redefining 1 & 1 = 0 in the Boolean quantale breaks the unit law
        let q = boolean().with_mul_entry(1, 1, 0);
        let rep = q.validate();
        assert!(!rep.is_valid());
        assert!(rep.mentions("unit"));
        let unit_violation = rep.violations.iter().find(|v| v.law == "unit").unwrap();
        assert!(unit_violation.witness.contains("k & 1"));
    }

    #[test]
    fn implication_closed_forms() {
        let g3 = godel_chain(3).unwrap();
        let l3 = mv_chain(3).unwrap();
        // Gödel: x → y = 1 if x ≤ y else y
        assert_eq!(g3.imp(1, 0), 0);
        assert_eq!(g3.imp(1, 2), 2);
        // Łukasiewicz: x → y = min(1, 1 − x + y)
        assert_eq!(l3.imp(1, 0), 1);
        assert_eq!(l3.imp(2, 1), 1);
        // k → r = r in any quantale
        for q in [&g3, &l3] {
            for r in q.elems() {
                assert_eq!(q.imp(q.unit(), r), r);
            }
        }
    }

    #[test]
    fn residuation_adjunction_exhaustive() {
        for q in [
            boolean(),
            godel_chain(4).unwrap(),
            mv_chain(5).unwrap(),
            mv3_block_chain(),
        ] {
            for p in q.elems() {
                for s in q.elems() {
                    for r in q.elems() {
                        let lhs = q.leq(q.mul(p, s), r);
                        let rhs = q.leq(s, q.imp(p, r));
                        assert_eq!(lhs, rhs, "p={p} q={s} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn properties_of_the_three_standard_quantales() {
        let g3 = godel_chain(3).unwrap().properties();
        assert!(g3.is_frame && g3.is_integral);
        assert_eq!(g3.idempotents, vec![0, 1, 2]);

        let l3 = mv_chain(3).unwrap().properties();
        assert!(!l3.is_frame && l3.is_integral);
        assert_eq!(l3.idempotents, vec![0, 2]);

        let b = boolean().properties();
        assert!(b.is_frame);
        assert_eq!(b.idempotents, vec![0, 1]);
    }

    #[test]
    fn idempotent_interval_collapses_multiplication_to_meet() {
        // x ≤ p ≤ y with p idempotent forces x & y = x ∧ y
        for q in [mv_chain(5).unwrap(), mv3_block_chain()] {
            let props = q.properties();
            for &p in &props.idempotents {
                for x in q.elems().filter(|&x| q.leq(x, p)) {
                    for y in q.elems().filter(|&y| q.leq(p, y)) {
                        assert_eq!(q.mul(x, y), q.meet(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn block_chain_multiplication_table() {
        let q = mv3_block_chain();
        let ix = |s: &str| q.index_of(s).unwrap();
        let (p, m, qq) = (ix("p"), ix("m"), ix("q"));
        assert_eq!(q.mul(m, m), p);
        assert_eq!(q.mul(m, qq), m);
        assert_eq!(q.mul(qq, qq), qq);
        assert_eq!(q.mul(p, m), p);
        assert_eq!(q.idempotent_bounds(m), (p, qq));
        assert_eq!(q.idempotent_bounds(p), (p, p));
    }

    #[test]
    fn shape_errors_are_structural() {
        let err = FiniteQuantale::from_tables(vec![], vec![], vec![], 0).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        let err = FiniteQuantale::from_tables(vec!["a".into()], vec![vec![true]], vec![vec![7]], 0)
            .unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }
}
