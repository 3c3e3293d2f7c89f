//! Quantale-valued ordered sets and the weight calculus: Yoneda embedding,
//! image and preimage weights, suprema, infima, tensors and adjunctions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quantale::{Elem, FiniteQuantale};
use crate::report::ValidationReport;

/// A map from a carrier into the quantale, stored in carrier order.
///
/// Depending on where it is used, a `QFun` is a weight, a coweight, an open
/// set or a point candidate; the checks are explicit
/// ([`QOrderedSet::is_weight`], [`QOrderedSet::is_coweight`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QFun(pub Vec<Elem>);

impl QFun {
    pub fn constant(len: usize, v: Elem) -> Self {
        QFun(vec![v; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renders the value tuple with element names, e.g. `[1,1/2]`.
    pub fn display(&self, q: &FiniteQuantale) -> String {
        let parts: Vec<&str> = self.0.iter().map(|&v| q.name(v)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// A finite carrier with a quantale-valued order matrix.
#[derive(Debug, Clone)]
pub struct QOrderedSet {
    pub quantale: Arc<FiniteQuantale>,
    pub carrier: Vec<String>,
    /// `order[x][y] = X(x,y)`.
    pub order: Vec<Vec<Elem>>,
}

/// A map between carriers given extensionally: `targets[x]` is the image of
/// the `x`-th point of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMap(pub Vec<usize>);

impl QOrderedSet {
    pub fn from_parts(
        quantale: Arc<FiniteQuantale>,
        carrier: Vec<String>,
        order: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let n = carrier.len();
        if n == 0 {
            return Err(Error::Structure("empty carrier".into()));
        }
        for (i, a) in carrier.iter().enumerate() {
            if carrier[..i].contains(a) {
                return Err(Error::Structure(format!("duplicate point name {a:?}")));
            }
        }
        if order.len() != n || order.iter().any(|row| row.len() != n) {
            return Err(Error::Structure(format!("order matrix is not {n}×{n}")));
        }
        if let Some(&bad) = order.iter().flatten().find(|&&e| e >= quantale.len()) {
            return Err(Error::Structure(format!("order entry {bad} out of range")));
        }
        Ok(QOrderedSet {
            quantale,
            carrier,
            order,
        })
    }

    /// The canonical order `α_L(x,y) = x → y` on the quantale itself.
    pub fn alpha_l(q: Arc<FiniteQuantale>) -> Self {
        let order = q
            .elems()
            .map(|x| q.elems().map(|y| q.imp(x, y)).collect())
            .collect();
        QOrderedSet {
            carrier: q.names().to_vec(),
            order,
            quantale: q,
        }
    }

    /// The opposite canonical order `α_R(x,y) = y → x`.
    pub fn alpha_r(q: Arc<FiniteQuantale>) -> Self {
        let order = q
            .elems()
            .map(|x| q.elems().map(|y| q.imp(y, x)).collect())
            .collect();
        QOrderedSet {
            carrier: q.names().to_vec(),
            order,
            quantale: q,
        }
    }

    /// The discrete order: `k` on the diagonal, `0` elsewhere.
    pub fn discrete(q: Arc<FiniteQuantale>, carrier: Vec<String>) -> Self {
        let n = carrier.len();
        let order = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| if x == y { q.unit() } else { q.bottom() })
                    .collect()
            })
            .collect();
        QOrderedSet {
            quantale: q,
            carrier,
            order,
        }
    }

    /// The set `Q^n` of all maps from an `n`-point carrier into `Q`, carrying
    /// the inclusion order `sub(f,g) = ⋀ f(x) → g(x)`.
    pub fn function_space(q: Arc<FiniteQuantale>, points: usize, cap: u64) -> Result<Self> {
        let funs = all_maps(q.len(), points, cap)?;
        let carrier: Vec<String> = funs.iter().map(|f| f.display(&q)).collect();
        let order = funs
            .iter()
            .map(|f| funs.iter().map(|g| sub_raw(&q, f, g)).collect())
            .collect();
        Ok(QOrderedSet {
            quantale: q,
            carrier,
            order,
        })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.carrier.iter().position(|p| p == name)
    }

    /// Checks reflexivity (`X(x,x) ≥ k`) and transitivity
    /// (`X(y,z) & X(x,y) ≤ X(x,z)`), reporting witnesses.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new();
        let q = &self.quantale;
        for x in self.points() {
            if !q.leq(q.unit(), self.order[x][x]) {
                rep.push(
                    "order-reflexivity",
                    format!(
                        "X({p},{p}) = {v} ≱ k",
                        p = self.carrier[x],
                        v = q.name(self.order[x][x])
                    ),
                );
            }
        }
        for x in self.points() {
            for y in self.points() {
                for z in self.points() {
                    let comp = q.mul(self.order[y][z], self.order[x][y]);
                    if !q.leq(comp, self.order[x][z]) {
                        rep.push(
                            "order-transitivity",
                            format!(
                                "X({y},{z}) & X({x},{y}) = {c} ≰ X({x},{z}) = {v}",
                                x = self.carrier[x],
                                y = self.carrier[y],
                                z = self.carrier[z],
                                c = q.name(comp),
                                v = q.name(self.order[x][z]),
                            ),
                        );
                    }
                }
            }
        }
        rep
    }

    /// The crisp order `x ≤ y iff k ≤ X(x,y)`.
    pub fn underlying_order(&self) -> Vec<Vec<bool>> {
        let q = &self.quantale;
        self.points()
            .map(|x| {
                self.points()
                    .map(|y| q.leq(q.unit(), self.order[x][y]))
                    .collect()
            })
            .collect()
    }

    /// No two distinct points are isomorphic.
    pub fn is_separated(&self) -> bool {
        let u = self.underlying_order();
        self.points()
            .all(|x| self.points().all(|y| x == y || !(u[x][y] && u[y][x])))
    }

    /// The inclusion order `sub(f,g) = ⋀_x f(x) → g(x)`.
    pub fn sub(&self, f: &QFun, g: &QFun) -> Result<Elem> {
        if f.len() != self.len() || g.len() != self.len() {
            return Err(Error::CarrierMismatch(format!(
                "functions of lengths {} and {} on a {}-point carrier",
                f.len(),
                g.len(),
                self.len()
            )));
        }
        Ok(sub_raw(&self.quantale, f, g))
    }

    /// The representable weight `X(−,x)`.
    pub fn yoneda(&self, x: usize) -> QFun {
        assert!(x < self.len(), "unknown point index {x}");
        QFun(self.points().map(|t| self.order[t][x]).collect())
    }

    /// The representable coweight `X(x,−)`.
    pub fn co_yoneda(&self, x: usize) -> QFun {
        assert!(x < self.len(), "unknown point index {x}");
        QFun(self.order[x].clone())
    }

    /// `φ(y) & X(x,y) ≤ φ(x)` for all `x, y`.
    pub fn is_weight(&self, f: &QFun) -> bool {
        let q = &self.quantale;
        self.points().all(|x| {
            self.points()
                .all(|y| q.leq(q.mul(f.0[y], self.order[x][y]), f.0[x]))
        })
    }

    /// `ψ(x) & X(x,y) ≤ ψ(y)` for all `x, y`.
    pub fn is_coweight(&self, f: &QFun) -> bool {
        let q = &self.quantale;
        self.points().all(|x| {
            self.points()
                .all(|y| q.leq(q.mul(f.0[x], self.order[x][y]), f.0[y]))
        })
    }

    /// All weights, in the lexicographic enumeration order of `Q^X`.
    pub fn weights(&self, cap: u64) -> Result<Vec<QFun>> {
        Ok(all_maps(self.quantale.len(), self.len(), cap)?
            .into_iter()
            .filter(|f| self.is_weight(f))
            .collect())
    }

    /// All coweights, in the lexicographic enumeration order of `Q^X`.
    pub fn coweights(&self, cap: u64) -> Result<Vec<QFun>> {
        Ok(all_maps(self.quantale.len(), self.len(), cap)?
            .into_iter()
            .filter(|f| self.is_coweight(f))
            .collect())
    }

    /// A point `a` with `X(a,y) = sub(φ, X(−,y))` for all `y`, if any.
    ///
    /// When `X` is not separated the first such point in carrier order is
    /// returned as the canonical representative.
    pub fn weight_sup(&self, phi: &QFun) -> Option<usize> {
        let q = &self.quantale;
        let target: Vec<Elem> = self
            .points()
            .map(|y| q.meet_all(self.points().map(|x| q.imp(phi.0[x], self.order[x][y]))))
            .collect();
        self.points()
            .find(|&a| self.points().all(|y| self.order[a][y] == target[y]))
    }

    /// A point `a` with `X(y,a) = sub(ψ, X(y,−))` for all `y`, if any.
    pub fn coweight_inf(&self, psi: &QFun) -> Option<usize> {
        let q = &self.quantale;
        let target: Vec<Elem> = self
            .points()
            .map(|y| q.meet_all(self.points().map(|x| q.imp(psi.0[x], self.order[y][x]))))
            .collect();
        self.points()
            .find(|&a| self.points().all(|y| self.order[y][a] == target[y]))
    }

    /// Every weight has a supremum.
    pub fn is_cocomplete(&self, cap: u64) -> Result<bool> {
        Ok(self
            .weights(cap)?
            .iter()
            .all(|phi| self.weight_sup(phi).is_some()))
    }

    /// A point `a` with `X(a,y) = r → X(x,y)` for all `y`, if any.
    pub fn tensor(&self, r: Elem, x: usize) -> Option<usize> {
        let q = &self.quantale;
        let target: Vec<Elem> = self.points().map(|y| q.imp(r, self.order[x][y])).collect();
        self.points()
            .find(|&a| self.points().all(|y| self.order[a][y] == target[y]))
    }

    /// Two points related by `k` in both directions.
    pub fn isomorphic_points(&self, a: usize, b: usize) -> bool {
        let q = &self.quantale;
        q.leq(q.unit(), self.order[a][b]) && q.leq(q.unit(), self.order[b][a])
    }
}

pub(crate) fn sub_raw(q: &FiniteQuantale, f: &QFun, g: &QFun) -> Elem {
    q.meet_all(f.0.iter().zip(&g.0).map(|(&a, &b)| q.imp(a, b)))
}

/// All maps from an `len`-point carrier into a `q_len`-element quantale, in
/// lexicographic order (first carrier point most significant, values by
/// element index).
pub fn all_maps(q_len: usize, len: usize, cap: u64) -> Result<Vec<QFun>> {
    let mut count: u64 = 1;
    for _ in 0..len {
        count = count
            .checked_mul(q_len as u64)
            .filter(|&c| c <= cap)
            .ok_or(Error::CapExceeded {
                required: u64::MAX,
                cap,
            })?;
    }
    if count > cap {
        return Err(Error::CapExceeded {
            required: count,
            cap,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut values = vec![0usize; len];
    loop {
        out.push(QFun(values.clone()));
        // odometer with the last position as the fastest digit
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < q_len {
                break;
            }
            values[pos] = 0;
        }
    }
}

impl QMap {
    pub fn identity(n: usize) -> Self {
        QMap((0..n).collect())
    }

    pub fn constant(n: usize, target: usize) -> Self {
        QMap(vec![target; n])
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `X(x,y) ≤ Y(f(x), f(y))` for all `x, y`.
    pub fn preserves_qorder(&self, x: &QOrderedSet, y: &QOrderedSet) -> bool {
        let q = &x.quantale;
        x.points().all(|a| {
            x.points()
                .all(|b| q.leq(x.order[a][b], y.order[self.0[a]][self.0[b]]))
        })
    }
}

/// The image weight `f^→(φ)(y) = ⋁_x φ(x) & Y(y, f(x))`.
///
/// Fails unless `f` preserves the quantale-valued order.
pub fn pushforward(f: &QMap, x: &QOrderedSet, y: &QOrderedSet, phi: &QFun) -> Result<QFun> {
    if !f.preserves_qorder(x, y) {
        return Err(Error::Precondition(
            "map does not preserve the Q-order".into(),
        ));
    }
    let q = &x.quantale;
    Ok(QFun(
        y.points()
            .map(|b| q.join_all(x.points().map(|a| q.mul(phi.0[a], y.order[b][f.0[a]]))))
            .collect(),
    ))
}

/// The preimage weight `f^←(ψ) = ψ ∘ f`.
pub fn pullback(f: &QMap, x: &QOrderedSet, y: &QOrderedSet, psi: &QFun) -> Result<QFun> {
    if !f.preserves_qorder(x, y) {
        return Err(Error::Precondition(
            "map does not preserve the Q-order".into(),
        ));
    }
    Ok(QFun(x.points().map(|a| psi.0[f.0[a]]).collect()))
}

///`Y(f(x), y) = X(x, g(y))` for all `x, y` — the defining adjunction equation.
pub fn is_adjoint(x: &QOrderedSet, y: &QOrderedSet, f: &QMap, g: &QMap) -> bool {
    x.points()
        .all(|a| y.points().all(|b| y.order[f.0[a]][b] == x.order[a][g.0[b]]))
}

/// The two-condition test: both maps preserve the quantale-valued order and
/// `f ⊣ g` holds between the underlying crisp orders.
pub fn adjoint_by_characterization(x: &QOrderedSet, y: &QOrderedSet, f: &QMap, g: &QMap) -> bool {
    if !f.preserves_qorder(x, y) || !g.preserves_qorder(y, x) {
        return false;
    }
    let ux = x.underlying_order();
    let uy = y.underlying_order();
    x.points()
        .all(|a| y.points().all(|b| uy[f.0[a]][b] == ux[a][g.0[b]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{boolean, godel_chain, mv_chain};

    fn l3() -> Arc<FiniteQuantale> {
        Arc::new(mv_chain(3).unwrap())
    }

    fn b2() -> Arc<FiniteQuantale> {
        Arc::new(boolean())
    }

    #[test]
    fn canonical_orders_validate() {
        assert!(QOrderedSet::alpha_l(l3()).validate().is_valid());
        assert!(QOrderedSet::alpha_r(l3()).validate().is_valid());
        let d = QOrderedSet::discrete(b2(), vec!["a".into(), "b".into()]);
        assert!(d.validate().is_valid());
    }

    #[test]
    fn broken_reflexivity_is_reported() {
        let q = b2();
        let x = QOrderedSet::from_parts(
            q,
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![0, 1]],
        )
        .unwrap();
        let rep = x.validate();
        assert!(rep.mentions("order-reflexivity"));
    }

    #[test]
    fn underlying_order_and_separatedness() {
        let x = QOrderedSet::alpha_l(l3());
        let u = x.underlying_order();
        for (a, row) in u.iter().enumerate() {
            for (b, &le) in row.iter().enumerate() {
                assert_eq!(le, a <= b);
            }
        }
        assert!(x.is_separated());

        let r = QOrderedSet::alpha_r(b2());
        let u = r.underlying_order();
        assert!(u[1][0] && !u[0][1]);

        let q = b2();
        let indiscrete = QOrderedSet::from_parts(
            q.clone(),
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![1, 1]],
        )
        .unwrap();
        assert!(!indiscrete.is_separated());
    }

    #[test]
    fn sub_order_examples() {
        let x = QOrderedSet::alpha_l(l3());
        let ones = QFun::constant(3, 2);
        let halves = QFun::constant(3, 1);
        assert_eq!(x.sub(&ones, &ones).unwrap(), 2);
        assert_eq!(x.sub(&ones, &halves).unwrap(), 1);
        assert!(x.sub(&ones, &QFun::constant(2, 0)).is_err());
    }

    #[test]
    fn yoneda_lemma_exhaustive() {
        for q in [b2(), Arc::new(godel_chain(3).unwrap()), l3()] {
            let x = QOrderedSet::alpha_l(q);
            for phi in x.weights(crate::DEFAULT_CAP).unwrap() {
                for a in x.points() {
                    assert_eq!(x.sub(&x.yoneda(a), &phi).unwrap(), phi.0[a]);
                }
            }
        }
    }

    #[test]
    fn yoneda_on_boolean_alpha_l() {
        let x = QOrderedSet::alpha_l(b2());
        assert_eq!(x.yoneda(0).0, vec![1, 0]);
        assert!(x.is_weight(&x.yoneda(0)));
        assert!(x.is_weight(&x.yoneda(1)));
    }

    #[test]
    fn sup_on_the_canonical_order_is_evaluation_at_the_unit() {
        for q in [b2(), l3(), Arc::new(godel_chain(4).unwrap())] {
            let x = QOrderedSet::alpha_l(q.clone());
            for phi in x.weights(crate::DEFAULT_CAP).unwrap() {
                let s = x.weight_sup(&phi).expect("cocomplete");
                assert_eq!(s, phi.0[q.unit()]);
            }
            assert!(x.is_cocomplete(crate::DEFAULT_CAP).unwrap());
        }
    }

    #[test]
    fn sup_of_representables() {
        let x = QOrderedSet::discrete(b2(), vec!["a".into(), "b".into()]);
        for a in x.points() {
            assert_eq!(x.weight_sup(&x.yoneda(a)), Some(a));
        }
        // characteristic weight of {a} on the discrete two-point set
        assert_eq!(x.weight_sup(&QFun(vec![1, 0])), Some(0));
    }

    #[test]
    fn antichain_is_not_cocomplete() {
        let x = QOrderedSet::discrete(b2(), vec!["a".into(), "b".into()]);
        assert_eq!(x.weight_sup(&QFun(vec![1, 1])), None);
        assert!(!x.is_cocomplete(crate::DEFAULT_CAP).unwrap());
        // and dually the constant-1 coweight has no infimum
        assert_eq!(x.coweight_inf(&QFun(vec![1, 1])), None);
    }

    #[test]
    fn infima_dual_checks() {
        let x = QOrderedSet::alpha_l(l3());
        for a in x.points() {
            assert_eq!(x.coweight_inf(&x.co_yoneda(a)), Some(a));
        }
        // the constant-1 coweight reaches the bottom on (Q, α_L)
        let g = QOrderedSet::alpha_l(Arc::new(godel_chain(3).unwrap()));
        assert_eq!(x.coweight_inf(&QFun::constant(3, 2)), Some(0));
        assert_eq!(g.coweight_inf(&QFun::constant(3, 2)), Some(0));
    }

    #[test]
    fn function_space_is_cocomplete() {
        let x = QOrderedSet::function_space(b2(), 2, crate::DEFAULT_CAP).unwrap();
        assert!(x.validate().is_valid());
        assert!(x.is_cocomplete(crate::DEFAULT_CAP).unwrap());
    }

    #[test]
    fn pushforward_pullback_adjunction() {
        // sub(f^→(φ), ψ) = sub(φ, f^←(ψ)) for every weight pair
        let x = QOrderedSet::alpha_l(l3());
        let y = QOrderedSet::discrete(l3(), vec!["a".into(), "b".into()]);
        for f_tab in all_maps(2, 3, 100).unwrap() {
            let f = QMap(f_tab.0);
            if !f.preserves_qorder(&x, &y) {
                continue;
            }
            for phi in x.weights(crate::DEFAULT_CAP).unwrap() {
                let image = pushforward(&f, &x, &y, &phi).unwrap();
                assert!(y.is_weight(&image));
                for psi in y.weights(crate::DEFAULT_CAP).unwrap() {
                    let lhs = y.sub(&image, &psi).unwrap();
                    let rhs = x.sub(&phi, &pullback(&f, &x, &y, &psi).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pullback_is_composition() {
        let x = QOrderedSet::alpha_l(b2());
        let f = QMap::identity(2);
        let psi = QFun(vec![0, 1]);
        assert_eq!(pullback(&f, &x, &x, &psi).unwrap(), psi);
        let bad = QMap(vec![1, 0]); // reverses the chain: not order-preserving
        assert!(pushforward(&bad, &x, &x, &psi).is_err());
    }

    #[test]
    fn adjunction_examples() {
        let x = QOrderedSet::alpha_l(l3());
        let id = QMap::identity(3);
        assert!(is_adjoint(&x, &x, &id, &id));
        // r & − ⊣ r → − on the canonical order
        let q = x.quantale.clone();
        for r in q.elems() {
            let f = QMap(q.elems().map(|t| q.mul(r, t)).collect());
            let g = QMap(q.elems().map(|t| q.imp(r, t)).collect());
            assert!(is_adjoint(&x, &x, &f, &g));
            assert!(adjoint_by_characterization(&x, &x, &f, &g));
        }
        let b = QOrderedSet::alpha_l(b2());
        assert!(!is_adjoint(
            &b,
            &b,
            &QMap::identity(2),
            &QMap::constant(2, 0)
        ));
    }

    #[test]
    fn identity_pushforward_fixes_weights() {
        let x = QOrderedSet::alpha_l(l3());
        let id = QMap::identity(3);
        for phi in x.weights(crate::DEFAULT_CAP).unwrap() {
            assert_eq!(pushforward(&id, &x, &x, &phi).unwrap(), phi);
        }
    }

    #[test]
    fn left_adjoints_preserve_tensors() {
        // f(r ⊗ x) isomorphic to r ⊗ f(x) whenever both exist, over every
        // adjoint pair on the two-point orders over B2
        let q = b2();
        let spaces: Vec<QOrderedSet> = all_maps(2, 4, 100)
            .unwrap()
            .into_iter()
            .filter_map(|f| {
                let order = vec![f.0[0..2].to_vec(), f.0[2..4].to_vec()];
                let x =
                    QOrderedSet::from_parts(q.clone(), vec!["a".into(), "b".into()], order).ok()?;
                x.validate().is_valid().then_some(x)
            })
            .collect();
        for x in &spaces {
            for y in &spaces {
                for f_tab in all_maps(2, 2, 100).unwrap() {
                    for g_tab in all_maps(2, 2, 100).unwrap() {
                        let f = QMap(f_tab.0.clone());
                        let g = QMap(g_tab.0.clone());
                        if !is_adjoint(x, y, &f, &g) {
                            continue;
                        }
                        for r in q.elems() {
                            for p in x.points() {
                                if let (Some(tx), Some(ty)) =
                                    (x.tensor(r, p), y.tensor(r, f.apply(p)))
                                {
                                    assert!(y.isomorphic_points(f.apply(tx), ty));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let x = QOrderedSet::alpha_l(l3());
        let q = x.quantale.clone();
        for r in q.elems() {
            for a in x.points() {
                // on (Q, α_L) the tensor is the multiplication
                assert_eq!(x.tensor(r, a), Some(q.mul(r, a)));
                // and matches the supremum of the weight r & X(−,a)
                let w = QFun(x.yoneda(a).0.iter().map(|&v| q.mul(r, v)).collect());
                assert_eq!(x.weight_sup(&w), x.tensor(r, a));
            }
            // k ⊗ x = x
            assert_eq!(x.tensor(q.unit(), r), Some(r));
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_capped() {
        let maps = all_maps(2, 2, 10).unwrap();
        let vals: Vec<Vec<usize>> = maps.into_iter().map(|f| f.0).collect();
        assert_eq!(vals, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(matches!(
            all_maps(10, 10, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }
}
