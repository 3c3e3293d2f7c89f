//! Flat ideals, the pitchfork pairing, F-cocompleteness, the way-below
//! relation and F-domain recognition, all by exhaustive enumeration.

use crate::error::{Error, Result};
use crate::qorder::{QFun, QOrderedSet};
use crate::quantale::Elem;

/// `φ ⋔ ψ = ⋁_x φ(x) & ψ(x)` — the degree to which a lower set and an upper
/// set meet.
pub fn pitchfork(x: &QOrderedSet, phi: &QFun, psi: &QFun) -> Result<Elem> {
    if phi.len() != x.len() || psi.len() != x.len() {
        return Err(Error::CarrierMismatch(format!(
            "functions of lengths {} and {} on a {}-point carrier",
            phi.len(),
            psi.len(),
            x.len()
        )));
    }
    Ok(pitchfork_raw(x, phi, psi))
}

pub(crate) fn pitchfork_raw(x: &QOrderedSet, phi: &QFun, psi: &QFun) -> Elem {
    let q = &x.quantale;
    q.join_all(phi.0.iter().zip(&psi.0).map(|(&a, &b)| q.mul(a, b)))
}

/// Inhabited: `⋁_x φ(x) ≥ k`.
pub fn is_inhabited(x: &QOrderedSet, phi: &QFun) -> bool {
    let q = &x.quantale;
    q.leq(q.unit(), q.join_all(phi.0.iter().copied()))
}

/// Flatness of a weight: inhabited, and the pitchfork pairing preserves
/// binary meets of coweights. All ordered coweight pairs are enumerated,
/// including equal ones; the first failing pair stops the scan.
pub fn is_flat(x: &QOrderedSet, phi: &QFun, cap: u64) -> Result<bool> {
    let coweights = x.coweights(cap)?;
    Ok(is_flat_with(x, phi, &coweights))
}

pub(crate) fn is_flat_with(x: &QOrderedSet, phi: &QFun, coweights: &[QFun]) -> bool {
    if !is_inhabited(x, phi) {
        return false;
    }
    let q = &x.quantale;
    let pf: Vec<Elem> = coweights
        .iter()
        .map(|psi| pitchfork_raw(x, phi, psi))
        .collect();
    for (i, psi1) in coweights.iter().enumerate() {
        for (j, psi2) in coweights.iter().enumerate() {
            let meet = QFun(
                psi1.0
                    .iter()
                    .zip(&psi2.0)
                    .map(|(&a, &b)| q.meet(a, b))
                    .collect(),
            );
            if pitchfork_raw(x, phi, &meet) != q.meet(pf[i], pf[j]) {
                return false;
            }
        }
    }
    true
}

/// The set of flat ideals of an ordered set, in enumeration order, together
/// with the base it came from.
#[derive(Debug, Clone)]
pub struct FlatIdealSet {
    pub base: QOrderedSet,
    pub ideals: Vec<QFun>,
}

impl FlatIdealSet {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, phi: &QFun) -> Option<usize> {
        self.ideals.iter().position(|f| f == phi)
    }

    /// The ideals as an ordered set under the inclusion order, with points
    /// named by their value tuples.
    pub fn as_qorder(&self) -> QOrderedSet {
        let q = &self.base.quantale;
        let carrier = self.ideals.iter().map(|f| f.display(q)).collect();
        let order = self
            .ideals
            .iter()
            .map(|f| {
                self.ideals
                    .iter()
                    .map(|g| crate::qorder::sub_raw(q, f, g))
                    .collect()
            })
            .collect();
        QOrderedSet {
            quantale: self.base.quantale.clone(),
            carrier,
            order,
        }
    }
}

/// Enumerates every flat ideal. Representable weights always qualify.
pub fn flat_ideals(x: &QOrderedSet, cap: u64) -> Result<FlatIdealSet> {
    let coweights = x.coweights(cap)?;
    let ideals = x
        .weights(cap)?
        .into_iter()
        .filter(|phi| is_flat_with(x, phi, &coweights))
        .collect();
    Ok(FlatIdealSet {
        base: x.clone(),
        ideals,
    })
}

/// The way-below relation `w(x,y) = ⋀_φ X(y, sup φ) → φ(x)`, the meet running
/// over flat ideals possessing a supremum. Ideals without one contribute
/// nothing, so the matrix is total even on sets that are not F-cocomplete.
#[derive(Debug, Clone)]
pub struct WayBelowMatrix {
    pub w: Vec<Vec<Elem>>,
}

impl WayBelowMatrix {
    /// The weight `w(−,y) = ⇓y`.
    pub fn down(&self, y: usize) -> QFun {
        QFun(self.w.iter().map(|row| row[y]).collect())
    }

    /// The coweight `w(x,−)`.
    pub fn up(&self, x: usize) -> QFun {
        QFun(self.w[x].clone())
    }
}

pub fn way_below(x: &QOrderedSet, cap: u64) -> Result<WayBelowMatrix> {
    let ideals = flat_ideals(x, cap)?;
    Ok(way_below_from(x, &ideals))
}

pub(crate) fn way_below_from(x: &QOrderedSet, ideals: &FlatIdealSet) -> WayBelowMatrix {
    let q = &x.quantale;
    let with_sup: Vec<(&QFun, usize)> = ideals
        .ideals
        .iter()
        .filter_map(|phi| x.weight_sup(phi).map(|s| (phi, s)))
        .collect();
    let w = x
        .points()
        .map(|a| {
            x.points()
                .map(|b| {
                    q.meet_all(
                        with_sup
                            .iter()
                            .map(|(phi, s)| q.imp(x.order[b][*s], phi.0[a])),
                    )
                })
                .collect()
        })
        .collect();
    WayBelowMatrix { w }
}

/// Every flat ideal has a supremum.
pub fn is_f_cocomplete(x: &QOrderedSet, cap: u64) -> Result<bool> {
    Ok(flat_ideals(x, cap)?
        .ideals
        .iter()
        .all(|phi| x.weight_sup(phi).is_some()))
}

/// Outcome of the F-domain check, carrying the `⇓` assignment as evidence.
#[derive(Debug, Clone)]
pub struct FDomainReport {
    pub holds: bool,
    pub separated: bool,
    pub f_cocomplete: bool,
    /// `⇓x = w(−,x)` for each carrier point.
    pub down_sets: Vec<QFun>,
    /// Points whose down set fails to be flat or to have the right supremum.
    pub failures: Vec<String>,
}

/// A separated, F-cocomplete set is an F-domain iff for every point `x` the
/// weight `w(−,x)` is a flat ideal with supremum `x`.
pub fn is_f_domain(x: &QOrderedSet, cap: u64) -> Result<FDomainReport> {
    let separated = x.is_separated();
    let coweights = x.coweights(cap)?;
    let ideals = flat_ideals(x, cap)?;
    let f_cocomplete = ideals.ideals.iter().all(|phi| x.weight_sup(phi).is_some());
    let w = way_below_from(x, &ideals);
    let mut failures = Vec::new();
    let mut down_sets = Vec::with_capacity(x.len());
    for p in x.points() {
        let d = w.down(p);
        if !is_flat_with(x, &d, &coweights) {
            failures.push(format!(
                "⇓{} = {} is not flat",
                x.carrier[p],
                d.display(&x.quantale)
            ));
        } else {
            match x.weight_sup(&d) {
                Some(s) if x.isomorphic_points(s, p) => {}
                Some(s) => failures.push(format!(
                    "sup ⇓{} = {} differs from {}",
                    x.carrier[p], x.carrier[s], x.carrier[p]
                )),
                None => failures.push(format!("⇓{} has no supremum", x.carrier[p])),
            }
        }
        down_sets.push(d);
    }
    Ok(FDomainReport {
        holds: separated && f_cocomplete && failures.is_empty(),
        separated,
        f_cocomplete,
        down_sets,
        failures,
    })
}

/// Verifies `w(x,y) = ⋁_z w(z,y) & w(x,z)` exhaustively; returns the first
/// offending pair. Meaningful on F-domains, where the equality must hold.
pub fn interpolation_check(x: &QOrderedSet, cap: u64) -> Result<Option<(usize, usize)>> {
    let q = &x.quantale;
    let w = way_below(x, cap)?;
    for a in x.points() {
        for b in x.points() {
            let composite = q.join_all(x.points().map(|z| q.mul(w.w[z][b], w.w[a][z])));
            if composite != w.w[a][b] {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}
