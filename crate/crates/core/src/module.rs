//! Quantale modules: complete lattices with a join-preserving quantale action,
//! and the passage back and forth to cocomplete separated ordered sets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice;
use crate::qorder::{all_maps, QOrderedSet};
use crate::quantale::{Elem, FiniteQuantale};
use crate::report::ValidationReport;

/// A finite complete lattice with a quantale action `⊗ : Q × X → X`.
#[derive(Debug, Clone)]
pub struct QModule {
    pub quantale: Arc<FiniteQuantale>,
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    /// `action[r][x] = r ⊗ x`.
    pub action: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl QModule {
    pub fn from_parts(
        quantale: Arc<FiniteQuantale>,
        elements: Vec<String>,
        leq: Vec<Vec<bool>>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Structure("empty module carrier".into()));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Structure(format!("leq table is not {n}×{n}")));
        }
        if action.len() != quantale.len() || action.iter().any(|row| row.len() != n) {
            return Err(Error::Structure(format!(
                "action table is not {}×{n}",
                quantale.len()
            )));
        }
        if let Some(&bad) = action.iter().flatten().find(|&&e| e >= n) {
            return Err(Error::Structure(format!("action entry {bad} out of range")));
        }
        let t = lattice::tables(&leq);
        Ok(QModule {
            quantale,
            elements,
            leq,
            action,
            join: t.join,
            meet: t.meet,
            bottom: t.bottom,
            top: t.top,
        })
    }

    /// The quantale acting on itself by multiplication.
    pub fn self_module(q: Arc<FiniteQuantale>) -> Self {
        let n = q.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| q.leq(a, b)).collect())
            .collect();
        let action = (0..n)
            .map(|r| (0..n).map(|x| q.mul(r, x)).collect())
            .collect();
        QModule::from_parts(q.clone(), q.names().to_vec(), leq, action).expect("self module")
    }

    /// `Q^X` with the pointwise order and the pointwise action `r ⊗ λ = r & λ`.
    pub fn function_module(q: Arc<FiniteQuantale>, points: usize, cap: u64) -> Result<Self> {
        let funs = all_maps(q.len(), points, cap)?;
        let names = funs.iter().map(|f| f.display(&q)).collect();
        let leq = funs
            .iter()
            .map(|f| {
                funs.iter()
                    .map(|g| f.0.iter().zip(&g.0).all(|(&a, &b)| q.leq(a, b)))
                    .collect()
            })
            .collect();
        let action = q
            .elems()
            .map(|r| {
                funs.iter()
                    .map(|f| {
                        let img: Vec<Elem> = f.0.iter().map(|&v| q.mul(r, v)).collect();
                        funs.iter()
                            .position(|g| g.0 == img)
                            .expect("closed under action")
                    })
                    .collect()
            })
            .collect();
        QModule::from_parts(q, names, leq, action)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elems(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn act(&self, r: Elem, x: usize) -> usize {
        self.action[r][x]
    }

    /// Checks the lattice axioms and the four action axioms: unit,
    /// composition, and join preservation in each argument (binary joins
    /// plus the empty join, which is all a finite lattice needs).
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new();
        lattice::check_partial_order(&self.leq, &self.elements, &mut rep);
        lattice::check_lattice(&self.leq, &self.elements, &mut rep);
        let lattice_ok = rep.is_valid();
        let q = &self.quantale;
        let en = &self.elements;
        let k = q.unit();
        for x in self.elems() {
            if self.action[k][x] != x {
                rep.push(
                    "action-unit",
                    format!(
                        "k ⊗ {} = {}, expected {}",
                        en[x], en[self.action[k][x]], en[x]
                    ),
                );
            }
        }
        for s in q.elems() {
            for r in q.elems() {
                for x in self.elems() {
                    let l = self.action[s][self.action[r][x]];
                    let rgt = self.action[q.mul(s, r)][x];
                    if l != rgt {
                        rep.push(
                            "action-composition",
                            format!(
                                "{} ⊗ ({} ⊗ {}) = {} ≠ {} = ({} & {}) ⊗ {}",
                                q.name(s),
                                q.name(r),
                                en[x],
                                en[l],
                                en[rgt],
                                q.name(s),
                                q.name(r),
                                en[x]
                            ),
                        );
                    }
                }
            }
        }
        if lattice_ok {
            for r in q.elems() {
                if self.action[r][self.bottom] != self.bottom {
                    rep.push(
                        "action-join-right",
                        format!(
                            "{} ⊗ ⊥ = {} ≠ ⊥",
                            q.name(r),
                            en[self.action[r][self.bottom]]
                        ),
                    );
                }
                for x in self.elems() {
                    for y in self.elems() {
                        let l = self.action[r][self.join[x][y]];
                        let rgt = self.join[self.action[r][x]][self.action[r][y]];
                        if l != rgt {
                            rep.push(
                                "action-join-right",
                                format!(
                                    "{} ⊗ ({} ∨ {}) = {} ≠ {}",
                                    q.name(r),
                                    en[x],
                                    en[y],
                                    en[l],
                                    en[rgt]
                                ),
                            );
                        }
                    }
                }
            }
            for x in self.elems() {
                if self.action[q.bottom()][x] != self.bottom {
                    rep.push(
                        "action-join-left",
                        format!("0 ⊗ {} = {} ≠ ⊥", en[x], en[self.action[q.bottom()][x]]),
                    );
                }
                for r in q.elems() {
                    for s in q.elems() {
                        let l = self.action[q.join(r, s)][x];
                        let rgt = self.join[self.action[r][x]][self.action[s][x]];
                        if l != rgt {
                            rep.push(
                                "action-join-left",
                                format!(
                                    "({} ∨ {}) ⊗ {} = {} ≠ {}",
                                    q.name(r),
                                    q.name(s),
                                    en[x],
                                    en[l],
                                    en[rgt]
                                ),
                            );
                        }
                    }
                }
            }
        }
        rep
    }
}

/// Whether `r ∧ −` is a module homomorphism of `(Q, &)` for every `r`.
/// Over an integral quantale this holds exactly when `&` is binary meet.
pub fn meet_maps_are_module_homs(q: &FiniteQuantale) -> bool {
    q.elems().all(|r| meet_map_hom_failure(q, r).is_none())
}

/// The first triple `(r, s, x)` with `r ∧ (s & x) ≠ s & (r ∧ x)`, or a
/// witness that `r ∧ −` fails to preserve joins, scanning in element order.
pub fn meet_action_hom_witness(q: &FiniteQuantale) -> Option<(Elem, Elem, Elem)> {
    q.elems().find_map(|r| meet_map_hom_failure(q, r))
}

fn meet_map_hom_failure(q: &FiniteQuantale, r: Elem) -> Option<(Elem, Elem, Elem)> {
    for s in q.elems() {
        for x in q.elems() {
            if q.meet(r, q.mul(s, x)) != q.mul(s, q.meet(r, x)) {
                return Some((r, s, x));
            }
        }
    }
    for x in q.elems() {
        for y in q.elems() {
            if q.meet(r, q.join(x, y)) != q.join(q.meet(r, x), q.meet(r, y)) {
                return Some((r, x, y));
            }
        }
    }
    None
}

/// The quantale-valued order `α(x,y) = ⋁ { r | r ⊗ x ≤ y }` of a module.
pub fn module_to_qlattice(m: &QModule) -> QOrderedSet {
    let q = &m.quantale;
    let order = m
        .elems()
        .map(|x| {
            m.elems()
                .map(|y| q.join_all(q.elems().filter(|&r| m.leq[m.action[r][x]][y])))
                .collect()
        })
        .collect();
    QOrderedSet {
        quantale: m.quantale.clone(),
        carrier: m.elements.clone(),
        order,
    }
}

/// The module structure of a cocomplete separated ordered set: the underlying
/// order together with the tensor as action.
pub fn qlattice_to_module(x: &QOrderedSet, cap: u64) -> Result<QModule> {
    if !x.is_separated() {
        return Err(Error::Precondition("ordered set is not separated".into()));
    }
    if !x.is_cocomplete(cap)? {
        return Err(Error::Precondition("ordered set is not cocomplete".into()));
    }
    let q = &x.quantale;
    let action = q
        .elems()
        .map(|r| {
            x.points()
                .map(|p| x.tensor(r, p).expect("tensors exist in a cocomplete set"))
                .collect()
        })
        .collect();
    QModule::from_parts(
        x.quantale.clone(),
        x.carrier.clone(),
        x.underlying_order(),
        action,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{boolean, mv_chain};
    use crate::DEFAULT_CAP;

    fn l3() -> Arc<FiniteQuantale> {
        Arc::new(mv_chain(3).unwrap())
    }

    #[test]
    fn self_module_validates() {
        for q in [Arc::new(boolean()), l3()] {
            assert!(QModule::self_module(q).validate().is_valid());
        }
    }

    #[test]
    fn function_module_validates() {
        let m = QModule::function_module(Arc::new(boolean()), 2, DEFAULT_CAP).unwrap();
        assert!(m.validate().is_valid());
    }

    #[test]
    fn broken_unit_action_is_reported() {
        let q = Arc::new(boolean());
        let mut m = QModule::self_module(q);
        m.action[1][0] = 1; // k ⊗ 0 = 1
        let rep = m.validate();
        assert!(rep.mentions("action-unit"));
    }

    #[test]
    fn module_of_function_space_gives_inclusion_order() {
        let q = Arc::new(boolean());
        let m = QModule::function_module(q.clone(), 2, DEFAULT_CAP).unwrap();
        let x = module_to_qlattice(&m);
        let fs = QOrderedSet::function_space(q, 2, DEFAULT_CAP).unwrap();
        assert_eq!(x.order, fs.order);
    }

    #[test]
    fn module_of_quantale_is_canonical_order() {
        let m = QModule::self_module(l3());
        let x = module_to_qlattice(&m);
        let al = QOrderedSet::alpha_l(l3());
        assert_eq!(x.order, al.order);
        assert!(x.is_separated());
        assert!(x.is_cocomplete(DEFAULT_CAP).unwrap());
    }

    #[test]
    fn round_trip_is_identity() {
        let m = QModule::self_module(l3());
        let back = qlattice_to_module(&module_to_qlattice(&m), DEFAULT_CAP).unwrap();
        assert_eq!(back.leq, m.leq);
        assert_eq!(back.action, m.action);
        assert!(back.validate().is_valid());
    }

    #[test]
    fn non_cocomplete_input_is_rejected() {
        let q = Arc::new(boolean());
        let anti = QOrderedSet::discrete(q, vec!["a".into(), "b".into()]);
        assert!(matches!(
            qlattice_to_module(&anti, DEFAULT_CAP),
            Err(Error::Precondition(_))
        ));
    }
}
