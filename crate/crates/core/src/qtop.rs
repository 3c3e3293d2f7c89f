//! Quantale-valued topological spaces: generation from a subbasis, axiom
//! validation, interior, continuity, specialization, the Sierpiński space and
//! the Scott topology of an ordered set.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::flat::{flat_ideals, pitchfork_raw};
use crate::qorder::{QFun, QMap, QOrderedSet};
use crate::quantale::{Elem, FiniteQuantale};
use crate::report::ValidationReport;

/// A finite carrier with an explicit finite family of open functions.
///
/// Opens are kept deduplicated and sorted by their value tuples, so equal
/// spaces compare equal and every derived output is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct QTopSpace {
    pub quantale: Arc<FiniteQuantale>,
    pub carrier: Vec<String>,
    pub opens: Vec<QFun>,
}

impl QTopSpace {
    pub fn from_parts(
        quantale: Arc<FiniteQuantale>,
        carrier: Vec<String>,
        opens: Vec<QFun>,
    ) -> Result<Self> {
        let n = carrier.len();
        for f in &opens {
            if f.len() != n {
                return Err(Error::Structure(format!(
                    "open set of length {} on a {n}-point carrier",
                    f.len()
                )));
            }
            if let Some(&bad) = f.0.iter().find(|&&v| v >= quantale.len()) {
                return Err(Error::Structure(format!(
                    "open-set value {bad} out of range"
                )));
            }
        }
        Ok(QTopSpace {
            quantale,
            carrier,
            opens: canonicalize(opens),
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

    pub fn is_open(&self, f: &QFun) -> bool {
        self.opens.binary_search(f).is_ok()
    }

    pub fn open_index(&self, f: &QFun) -> Option<usize> {
        self.opens.binary_search(f).ok()
    }
}

fn canonicalize(mut opens: Vec<QFun>) -> Vec<QFun> {
    opens.sort();
    opens.dedup();
    opens
}

/// Closes a subbasis under the four open-set axioms: the constant `1`,
/// binary meets, binary joins plus the empty join, and scaling `λ & r`.
/// Finiteness of `Q^X` bounds the closure; `cap` limits its size.
pub fn generate_topology(
    quantale: Arc<FiniteQuantale>,
    carrier: Vec<String>,
    subbasis: &[QFun],
    cap: u64,
) -> Result<QTopSpace> {
    let n = carrier.len();
    for f in subbasis {
        if f.len() != n {
            return Err(Error::Structure(format!(
                "subbasis function of length {} on a {n}-point carrier",
                f.len()
            )));
        }
    }
    let q = &quantale;
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut family: Vec<QFun> = Vec::new();
    let push = |family: &mut Vec<QFun>, seen: &mut HashSet<Vec<Elem>>, f: QFun| {
        if seen.insert(f.0.clone()) {
            family.push(f);
        }
    };
    push(&mut family, &mut seen, QFun::constant(n, q.top()));
    for f in subbasis {
        push(&mut family, &mut seen, f.clone());
    }
    let mut frontier = 0;
    while frontier < family.len() {
        if family.len() as u64 > cap {
            return Err(Error::CapExceeded {
                required: family.len() as u64,
                cap,
            });
        }
        let hi = family.len();
        for i in frontier..hi {
            for r in q.elems() {
                let scaled = QFun(family[i].0.iter().map(|&v| q.mul(v, r)).collect());
                push(&mut family, &mut seen, scaled);
            }
            for j in 0..hi {
                let a = &family[i];
                let b = &family[j];
                let meet = QFun(a.0.iter().zip(&b.0).map(|(&x, &y)| q.meet(x, y)).collect());
                let join = QFun(a.0.iter().zip(&b.0).map(|(&x, &y)| q.join(x, y)).collect());
                push(&mut family, &mut seen, meet);
                push(&mut family, &mut seen, join);
            }
        }
        frontier = hi;
    }
    QTopSpace::from_parts(quantale, carrier, family)
}

/// Checks the four open-set axioms, reporting each failure with a witness.
pub fn validate_topology(t: &QTopSpace) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let q = &t.quantale;
    let n = t.len();
    if !t.is_open(&QFun::constant(n, q.top())) {
        rep.push("opens-constant-one", "constant 1 is not open");
    }
    if !t.is_open(&QFun::constant(n, q.bottom())) {
        rep.push("opens-empty-join", "constant 0 is not open");
    }
    for (i, a) in t.opens.iter().enumerate() {
        for b in &t.opens[i..] {
            let meet = QFun(a.0.iter().zip(&b.0).map(|(&x, &y)| q.meet(x, y)).collect());
            if !t.is_open(&meet) {
                rep.push(
                    "opens-binary-meet",
                    format!("{} ∧ {} is not open", a.display(q), b.display(q)),
                );
            }
            let join = QFun(a.0.iter().zip(&b.0).map(|(&x, &y)| q.join(x, y)).collect());
            if !t.is_open(&join) {
                rep.push(
                    "opens-binary-join",
                    format!("{} ∨ {} is not open", a.display(q), b.display(q)),
                );
            }
        }
        for r in q.elems() {
            let scaled = QFun(a.0.iter().map(|&v| q.mul(v, r)).collect());
            if !t.is_open(&scaled) {
                rep.push(
                    "opens-scaling",
                    format!("{} & {} is not open", a.display(q), q.name(r)),
                );
            }
        }
    }
    rep
}

/// `λ° = ⋁ { μ open | μ ≤ λ }`.
pub fn interior(t: &QTopSpace, lambda: &QFun) -> Result<QFun> {
    if lambda.len() != t.len() {
        return Err(Error::CarrierMismatch(format!(
            "function of length {} on a {}-point carrier",
            lambda.len(),
            t.len()
        )));
    }
    let q = &t.quantale;
    let mut acc = QFun::constant(t.len(), q.bottom());
    for mu in &t.opens {
        if mu.0.iter().zip(&lambda.0).all(|(&m, &l)| q.leq(m, l)) {
            for (a, &m) in acc.0.iter_mut().zip(&mu.0) {
                *a = q.join(*a, m);
            }
        }
    }
    Ok(acc)
}

/// `λ ∘ f` is open in the domain for every open `λ` of the codomain.
pub fn is_continuous(f: &QMap, x: &QTopSpace, y: &QTopSpace) -> bool {
    y.opens.iter().all(|lam| {
        let pulled = QFun(f.0.iter().map(|&p| lam.0[p]).collect());
        x.is_open(&pulled)
    })
}

/// The specialization order `ΩX(x,y) = ⋀_λ λ(x) → λ(y)`.
pub fn specialization(t: &QTopSpace) -> QOrderedSet {
    let q = &t.quantale;
    let order = t
        .points()
        .map(|x| {
            t.points()
                .map(|y| q.meet_all(t.opens.iter().map(|lam| q.imp(lam.0[x], lam.0[y]))))
                .collect()
        })
        .collect();
    QOrderedSet {
        quantale: t.quantale.clone(),
        carrier: t.carrier.clone(),
        order,
    }
}

/// Some open separates any two distinct points; equivalently the
/// specialization order is separated.
pub fn is_t0(t: &QTopSpace) -> bool {
    specialization(t).is_separated()
}

/// The Sierpiński space: the quantale itself under the coarsest topology
/// containing the identity map.
pub fn sierpinski(q: Arc<FiniteQuantale>, cap: u64) -> Result<QTopSpace> {
    let id = QFun(q.elems().collect());
    generate_topology(q.clone(), q.names().to_vec(), &[id], cap)
}

/// An ordered set equipped with its Scott topology.
#[derive(Debug, Clone)]
pub struct ScottSpace {
    pub base: QOrderedSet,
    pub space: QTopSpace,
}

/// The Scott topology: all coweights `ψ` with `ψ(sup φ) ≤ φ ⋔ ψ` for every
/// flat ideal `φ` that has a supremum.
pub fn scott_topology(x: &QOrderedSet, cap: u64) -> Result<ScottSpace> {
    let ideals = flat_ideals(x, cap)?;
    let with_sup: Vec<(&QFun, usize)> = ideals
        .ideals
        .iter()
        .filter_map(|phi| x.weight_sup(phi).map(|s| (phi, s)))
        .collect();
    let q = &x.quantale;
    let opens: Vec<QFun> = x
        .coweights(cap)?
        .into_iter()
        .filter(|psi| {
            with_sup
                .iter()
                .all(|(phi, s)| q.leq(psi.0[*s], pitchfork_raw(x, phi, psi)))
        })
        .collect();
    let space = QTopSpace::from_parts(x.quantale.clone(), x.carrier.clone(), opens)?;
    Ok(ScottSpace {
        base: x.clone(),
        space,
    })
}
