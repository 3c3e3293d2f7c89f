//! Closed-form analytics on `[0,1]` under a continuous t-norm: the smallest
//! flat ideal `d(x)`, flatness of weights over Archimedean t-norms, Scott-open
//! criteria for the canonical order and its opposite, and the decision
//! procedures for when `[0,1]` is a domain.
//!
//! Quantities defined by suprema over `[0,1]` are sampled on a uniform grid
//! with tolerance `1.5/n`; closed forms compare at [`REAL_TOL`].

use crate::error::{Error, Result};
use crate::tnorm::{TNorm, REAL_TOL};

/// Default number of grid samples.
pub const DEFAULT_GRID: usize = 101;

/// A uniform sampling grid on `[0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub n: usize,
}

impl Grid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Structure(format!("grid needs n ≥ 2, got {n}")));
        }
        Ok(Grid { n })
    }

    pub fn point(&self, i: usize) -> f64 {
        i as f64 / (self.n - 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.point(i))
    }

    /// Tolerance for sup-approximations: one cell times the Lipschitz bound.
    pub fn tol(&self) -> f64 {
        1.5 / self.n as f64
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid { n: DEFAULT_GRID }
    }
}

/// A weight or coweight of `([0,1], α_L)` or `([0,1], α_R)`.
///
/// `Representable(a)` evaluates to `t ↦ t → a`, which is the representable
/// weight of the canonical order and the representable coweight of its
/// opposite. `Smallest(x)` is the ideal `d(x)`; `Sampled` carries raw grid
/// values.
#[derive(Debug, Clone, PartialEq)]
pub enum IntervalFun {
    Representable(f64),
    Smallest(f64),
    Sampled(Vec<f64>),
}

impl IntervalFun {
    /// Samples the function at every grid point.
    pub fn values(&self, t: &TNorm, grid: &Grid) -> Result<Vec<f64>> {
        match self {
            IntervalFun::Representable(a) => {
                if !(0.0..=1.0).contains(a) {
                    return Err(Error::Domain(format!("{a} is outside [0,1]")));
                }
                Ok(grid.points().map(|x| t.im(x, *a)).collect())
            }
            IntervalFun::Smallest(x0) => {
                if !(0.0..=1.0).contains(x0) {
                    return Err(Error::Domain(format!("{x0} is outside [0,1]")));
                }
                Ok(grid.points().map(|tv| d_eval(t, *x0, tv)).collect())
            }
            IntervalFun::Sampled(v) => {
                if v.len() != grid.n {
                    return Err(Error::Structure(format!(
                        "sampled function has {} values on a {}-point grid",
                        v.len(),
                        grid.n
                    )));
                }
                if let Some(bad) = v.iter().find(|x| !(0.0..=1.0).contains(*x)) {
                    return Err(Error::Domain(format!("sampled value {bad} outside [0,1]")));
                }
                Ok(v.clone())
            }
        }
    }
}

/// The smallest flat ideal with supremum at least `x`, evaluated at `t`:
/// `t → 0` when `x = 0`; `1` at `t = 0`; `x⁺ ∧ (t → x)` otherwise.
pub fn d_eval(tn: &TNorm, x: f64, t: f64) -> f64 {
    if x < REAL_TOL {
        tn.im(t, 0.0)
    } else if t < REAL_TOL {
        1.0
    } else {
        let (_, x_plus) = tn.idempotent_bounds(x);
        x_plus.min(tn.im(t, x))
    }
}

/// Builder for the ideal `d(x)`.
pub fn d_ideal(x: f64) -> IntervalFun {
    IntervalFun::Smallest(x)
}

/// Weight condition for the canonical order: `φ(y) & (x → y) ≤ φ(x)`.
pub fn is_weight_alpha_l(t: &TNorm, phi: &[f64], grid: &Grid) -> bool {
    grid.points().enumerate().all(|(i, x)| {
        grid.points()
            .enumerate()
            .all(|(j, y)| t.ev(phi[j], t.im(x, y)) <= phi[i] + REAL_TOL)
    })
}

/// Coweight condition for the canonical order: `ψ(x) & (x → y) ≤ ψ(y)`.
pub fn is_coweight_alpha_l(t: &TNorm, psi: &[f64], grid: &Grid) -> bool {
    grid.points().enumerate().all(|(i, x)| {
        grid.points()
            .enumerate()
            .all(|(j, y)| t.ev(psi[i], t.im(x, y)) <= psi[j] + REAL_TOL)
    })
}

/// Coweight condition for the opposite order: `ψ(x) & (y → x) ≤ ψ(y)`.
pub fn is_coweight_alpha_r(t: &TNorm, psi: &[f64], grid: &Grid) -> bool {
    grid.points().enumerate().all(|(i, x)| {
        grid.points()
            .enumerate()
            .all(|(j, y)| t.ev(psi[i], t.im(y, x)) <= psi[j] + REAL_TOL)
    })
}

/// Over an Archimedean t-norm the flat ideals of `([0,1], α_L)` are exactly
/// the representables, so flatness of `φ` reduces to matching `t ↦ t → a`
/// for the candidate `a = φ(1)`.
pub fn archimedean_flat_characterization(
    t: &TNorm,
    phi: &IntervalFun,
    grid: &Grid,
) -> Result<bool> {
    if !t.is_archimedean() {
        return Err(Error::Precondition(
            "t-norm is not Archimedean: a single piece must cover [0,1]".into(),
        ));
    }
    let v = phi.values(t, grid)?;
    let a = v[grid.n - 1];
    Ok(grid
        .points()
        .enumerate()
        .all(|(i, x)| (v[i] - t.im(x, a)).abs() <= grid.tol()))
}

/// The Scott-open criterion for a coweight of `([0,1], α_L)`: for `x > 0`,
/// `ψ(x) > x⁺` forces `ψ(x) = ψ(0)`.
pub fn scott_open_alpha_l(t: &TNorm, psi: &IntervalFun, grid: &Grid) -> Result<bool> {
    let v = psi.values(t, grid)?;
    if !is_coweight_alpha_l(t, &v, grid) {
        return Err(Error::Precondition(
            "function is not a coweight of ([0,1], α_L)".into(),
        ));
    }
    Ok(grid.points().enumerate().skip(1).all(|(i, x)| {
        let (_, x_plus) = t.idempotent_bounds(x);
        v[i] <= x_plus + REAL_TOL || (v[i] - v[0]).abs() <= REAL_TOL
    }))
}

/// `([0,1], α_L)` is a domain iff every Łukasiewicz piece starts at `0`.
pub fn domain_condition(t: &TNorm) -> bool {
    t.pieces()
        .iter()
        .all(|p| p.kind != crate::tnorm::PieceKind::Lukasiewicz || p.lo < REAL_TOL)
}

/// The Sierpiński topology on `[0,1]` is the Scott topology of its
/// specialization order exactly for the Gödel t-norm.
pub fn sierpinski_equals_scott(t: &TNorm) -> bool {
    t.pieces().is_empty()
}

/// For a non-idempotent `c`, the map `((c → c⁻) ∨ (c → x)) ∧ c⁺`: Scott open
/// for the canonical order, yet outside the Sierpiński open family.
pub fn counterexample_eval(t: &TNorm, c: f64, x: f64) -> f64 {
    let (c_minus, c_plus) = t.idempotent_bounds(c);
    t.im(c, c_minus).max(t.im(c, x)).min(c_plus)
}

pub fn counterexample_open(t: &TNorm, c: f64, grid: &Grid) -> Result<IntervalFun> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::Domain(format!("{c} is outside [0,1]")));
    }
    if t.is_idempotent(c) {
        return Err(Error::Precondition(format!("{c} is idempotent")));
    }
    Ok(IntervalFun::Sampled(
        grid.points()
            .map(|x| counterexample_eval(t, c, x))
            .collect(),
    ))
}

/// Membership in the three-parameter family `(a ∨ (id & r)) ∧ b`: the outer
/// parameters are read off at the endpoints, `r` is the meet of the residuals
/// at all uncapped samples, and the candidate is verified globally.
pub fn in_sierpinski_family(t: &TNorm, values: &[f64], grid: &Grid) -> bool {
    if values.len() != grid.n {
        return false;
    }
    let a = values[0];
    let b = values[grid.n - 1];
    let mut r = 1.0f64;
    for (i, x) in grid.points().enumerate() {
        if values[i] < b - REAL_TOL {
            r = r.min(t.im(x, values[i]));
        }
    }
    grid.points()
        .enumerate()
        .all(|(i, x)| (a.max(t.ev(x, r)).min(b) - values[i]).abs() <= grid.tol())
}

/// `([0,1], α_R)` is a domain — equivalently its Scott topology is sober —
/// iff the t-norm is Archimedean.
pub fn alpha_r_f_domain(t: &TNorm) -> bool {
    t.is_archimedean()
}

/// Necessary conditions on coweights of `([0,1], α_R)` and the bound forced
/// on non-constant Scott-open candidates by a nontrivial idempotent.
#[derive(Debug, Clone, Default)]
pub struct AlphaRReport {
    /// Witness against: `ψ(x) ≤ x⁻` forces `ψ(x) = ψ(1)`.
    pub floor_violation: Option<String>,
    /// Witness against: idempotent `x` with `ψ(x) ≥ x` forces `ψ(1) ≥ x`.
    pub idempotent_violation: Option<String>,
    /// The smallest nontrivial idempotent on the grid, when one exists.
    pub bound: Option<f64>,
    /// Witness against `ψ ≤ bound` for a non-constant candidate.
    pub bound_violation: Option<String>,
}

impl AlphaRReport {
    pub fn passes(&self) -> bool {
        self.floor_violation.is_none()
            && self.idempotent_violation.is_none()
            && self.bound_violation.is_none()
    }
}

pub fn alpha_r_coweight_checks(t: &TNorm, psi: &IntervalFun, grid: &Grid) -> Result<AlphaRReport> {
    let v = psi.values(t, grid)?;
    if !is_coweight_alpha_r(t, &v, grid) {
        return Err(Error::Precondition(
            "function is not a coweight of ([0,1], α_R)".into(),
        ));
    }
    let mut rep = AlphaRReport::default();
    let last = v[grid.n - 1];
    for (i, x) in grid.points().enumerate() {
        let (x_minus, _) = t.idempotent_bounds(x);
        if v[i] <= x_minus + REAL_TOL && (v[i] - last).abs() > REAL_TOL {
            rep.floor_violation = Some(format!(
                "ψ({x}) = {} ≤ x⁻ = {x_minus} but ψ(1) = {last}",
                v[i]
            ));
            break;
        }
    }
    for (i, x) in grid.points().enumerate() {
        if t.is_idempotent(x) && v[i] >= x - REAL_TOL && last < x - REAL_TOL {
            rep.idempotent_violation = Some(format!(
                "idempotent {x} has ψ({x}) = {} yet ψ(1) = {last}",
                v[i]
            ));
            break;
        }
    }
    let nontrivial = grid
        .points()
        .filter(|&x| x > REAL_TOL && x < 1.0 - REAL_TOL && t.is_idempotent(x))
        .fold(None::<f64>, |acc, x| Some(acc.map_or(x, |m: f64| m.min(x))));
    rep.bound = nontrivial;
    if let Some(b) = nontrivial {
        let non_constant = v.iter().any(|&y| (y - v[0]).abs() > REAL_TOL);
        if non_constant {
            if let Some((i, x)) = grid
                .points()
                .enumerate()
                .find(|&(i, _)| v[i] > b + REAL_TOL)
            {
                rep.bound_violation = Some(format!("ψ({x}) = {} exceeds the idempotent {b}", v[i]));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::default()
    }

    #[test]
    fn d_ideal_closed_forms() {
        let l = TNorm::lukasiewicz();
        // d(0)(t) = t → 0 = 1 − t
        for t in grid().points() {
            assert!((d_eval(&l, 0.0, t) - (1.0 - t)).abs() < REAL_TOL);
        }
        // d(x)(0) = 1 for every positive x
        for tn in [TNorm::godel(), TNorm::product(), TNorm::luk_then_product()] {
            assert!((d_eval(&tn, 0.4, 0.0) - 1.0).abs() < REAL_TOL);
        }
        // product, x = 0.5, t = 0.8: 1 ∧ (0.8 → 0.5) = 0.625
        let p = TNorm::product();
        assert!((d_eval(&p, 0.5, 0.8) - 0.625).abs() < REAL_TOL);
    }

    #[test]
    fn d_ideal_is_a_weight_and_inhabited() {
        for tn in [
            TNorm::godel(),
            TNorm::product(),
            TNorm::lukasiewicz(),
            TNorm::product_then_luk(),
        ] {
            for x in [0.0, 0.3, 0.5, 1.0] {
                let g = grid();
                let v = d_ideal(x).values(&tn, &g).unwrap();
                // weight of α_L: φ(y) & (x → y) ≤ φ(x)
                for (i, xi) in g.points().enumerate() {
                    for (j, xj) in g.points().enumerate() {
                        assert!(tn.ev(v[j], tn.im(xi, xj)) <= v[i] + REAL_TOL);
                    }
                }
                assert!((v[0] - 1.0).abs() < REAL_TOL || x < REAL_TOL);
            }
        }
    }

    #[test]
    fn archimedean_characterization_examples() {
        let g = grid();
        let p = TNorm::product();
        assert!(
            archimedean_flat_characterization(&p, &IntervalFun::Representable(0.3), &g).unwrap()
        );

        let l = TNorm::lukasiewicz();
        let shifted = IntervalFun::Sampled(g.points().map(|t| (1.2 - t).min(1.0)).collect());
        assert!(archimedean_flat_characterization(&l, &shifted, &g).unwrap());

        let square = IntervalFun::Sampled(g.points().map(|t| (1.0 - t) * (1.0 - t)).collect());
        assert!(!archimedean_flat_characterization(&l, &square, &g).unwrap());

        // not Archimedean: precondition fails
        assert!(matches!(
            archimedean_flat_characterization(
                &TNorm::godel(),
                &IntervalFun::Representable(0.1),
                &g
            ),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn scott_open_criterion_examples() {
        let g = grid();
        // constants are Scott open
        for tn in [TNorm::godel(), TNorm::product(), TNorm::lukasiewicz()] {
            let c = IntervalFun::Sampled(vec![0.7; g.n]);
            assert!(scott_open_alpha_l(&tn, &c, &g).unwrap());
        }
        // product: the identity coweight is open, the condition being vacuous
        let id = IntervalFun::Sampled(g.points().collect());
        assert!(scott_open_alpha_l(&TNorm::product(), &id, &g).unwrap());
        // Gödel: the step function jumping at 0 fails
        let step = IntervalFun::Sampled(
            g.points()
                .map(|x| if x < REAL_TOL { 0.0 } else { 1.0 })
                .collect(),
        );
        assert!(!scott_open_alpha_l(&TNorm::godel(), &step, &g).unwrap());
        // a non-coweight is rejected before the criterion runs
        let decreasing = IntervalFun::Sampled(g.points().map(|x| 1.0 - x).collect());
        assert!(matches!(
            scott_open_alpha_l(&TNorm::godel(), &decreasing, &g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn domain_condition_on_the_fixtures() {
        assert!(domain_condition(&TNorm::godel()));
        assert!(domain_condition(&TNorm::product()));
        assert!(domain_condition(&TNorm::lukasiewicz()));
        assert!(domain_condition(&TNorm::luk_then_product()));
        assert!(!domain_condition(&TNorm::product_then_luk()));
        assert!(!domain_condition(&TNorm::three_piece_mix()));
        assert!(!domain_condition(&TNorm::luk_block()));
    }

    #[test]
    fn sierpinski_scott_equality_is_godel_only() {
        assert!(sierpinski_equals_scott(&TNorm::godel()));
        assert!(!sierpinski_equals_scott(&TNorm::lukasiewicz()));
        assert!(!sierpinski_equals_scott(&TNorm::luk_then_product()));
    }

    #[test]
    fn counterexample_is_scott_open_but_not_sierpinski() {
        let g = grid();
        let l = TNorm::lukasiewicz();
        let lam = counterexample_open(&l, 0.5, &g).unwrap();
        // closed form at c = 1/2: min(1, 1/2 + x)
        let v = lam.values(&l, &g).unwrap();
        for (i, x) in g.points().enumerate() {
            assert!((v[i] - (0.5 + x).min(1.0)).abs() < REAL_TOL);
        }
        assert!(scott_open_alpha_l(&l, &lam, &g).unwrap());
        assert!(!in_sierpinski_family(&l, &v, &g));
        // idempotent c is rejected
        assert!(matches!(
            counterexample_open(&TNorm::godel(), 0.5, &g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn family_membership_solver_accepts_family_members() {
        let g = grid();
        for tn in [
            TNorm::godel(),
            TNorm::lukasiewicz(),
            TNorm::product_then_luk(),
        ] {
            for (a, r, b) in [
                (0.0f64, 1.0f64, 1.0f64),
                (0.2, 0.7, 0.9),
                (0.5, 0.0, 0.8),
                (0.3, 0.3, 0.3),
            ] {
                let values: Vec<f64> = g.points().map(|x| a.max(tn.ev(x, r)).min(b)).collect();
                assert!(in_sierpinski_family(&tn, &values, &g), "a={a} r={r} b={b}");
            }
        }
        // a genuinely two-sloped map is not in the family
        let l = TNorm::lukasiewicz();
        let kinked: Vec<f64> = g
            .points()
            .map(|x| {
                if x < 0.5 {
                    0.8 * x
                } else {
                    0.4 + 0.2 * (x - 0.5)
                }
            })
            .collect();
        assert!(!in_sierpinski_family(&l, &kinked, &g));
    }

    #[test]
    fn alpha_r_fixture_verdicts() {
        assert!(alpha_r_f_domain(&TNorm::lukasiewicz()));
        assert!(alpha_r_f_domain(&TNorm::product()));
        assert!(!alpha_r_f_domain(&TNorm::godel()));
        assert!(!alpha_r_f_domain(&TNorm::luk_then_product()));
        assert!(!alpha_r_f_domain(&TNorm::three_piece_mix()));
    }

    #[test]
    fn alpha_r_coweight_reports() {
        let g = grid();
        // constants pass everything
        for tn in [TNorm::godel(), TNorm::lukasiewicz()] {
            let c = IntervalFun::Sampled(vec![0.6; g.n]);
            assert!(alpha_r_coweight_checks(&tn, &c, &g).unwrap().passes());
        }
        // Łukasiewicz: the representable coweight t ↦ t → 1/2 passes, no
        // nontrivial idempotent applying
        let l = TNorm::lukasiewicz();
        let rep = alpha_r_coweight_checks(&l, &IntervalFun::Representable(0.5), &g).unwrap();
        assert!(rep.passes());
        assert_eq!(rep.bound, None);
        // Gödel: the representable coweight t ↦ t → 0.8 is non-constant and
        // exceeds every nontrivial idempotent, so the bound flags it
        let tn = TNorm::godel();
        let rep = alpha_r_coweight_checks(&tn, &IntervalFun::Representable(0.8), &g).unwrap();
        assert!(rep.bound.is_some());
        assert!(rep.bound_violation.is_some());
        assert!(!rep.passes());
    }
}
