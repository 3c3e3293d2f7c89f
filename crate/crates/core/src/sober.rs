//! Points of quantale modules, the unit and counit of the open-set/points
//! adjunction, sobriety certificates, sobrification and spatiality.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::module::QModule;
use crate::qorder::QFun;
use crate::qtop::QTopSpace;
use crate::quantale::Elem;

/// A point of a module: a map into the quantale preserving finite meets,
/// arbitrary joins and the action. Values are indexed by module element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModulePoint {
    pub values: Vec<Elem>,
}

/// The open-set module of a space: opens under the pointwise order, with the
/// action `r ⊗ λ = λ & r`. Fails when the open family is not closed under
/// scaling, which a valid topology rules out.
pub fn open_set_module(t: &QTopSpace) -> Result<QModule> {
    let q = &t.quantale;
    let names = t.opens.iter().map(|f| f.display(q)).collect();
    let leq = t
        .opens
        .iter()
        .map(|f| {
            t.opens
                .iter()
                .map(|g| f.0.iter().zip(&g.0).all(|(&a, &b)| q.leq(a, b)))
                .collect()
        })
        .collect();
    let action = q
        .elems()
        .map(|r| {
            t.opens
                .iter()
                .map(|f| {
                    let scaled = QFun(f.0.iter().map(|&v| q.mul(v, r)).collect());
                    t.open_index(&scaled).ok_or_else(|| {
                        Error::Precondition(format!(
                            "family is not closed under scaling: {} & {} is missing",
                            f.display(q),
                            q.name(r)
                        ))
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    QModule::from_parts(t.quantale.clone(), names, leq, action)
}

/// A small module generating set: closing it under the action and arbitrary
/// joins recovers every element. Grown greedily from the top of what is still
/// missing, which keeps the point search at `|Q|^|G|` candidates.
pub fn module_generators(m: &QModule) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    loop {
        let have = closure(m, &gens);
        let missing: Vec<usize> = m.elems().filter(|&x| !have[x]).collect();
        let Some(&pick) = missing
            .iter()
            .find(|&&x| missing.iter().all(|&y| y == x || !m.leq[x][y]))
        else {
            return gens;
        };
        gens.push(pick);
    }
}

fn closure(m: &QModule, gens: &[usize]) -> Vec<bool> {
    let mut have = vec![false; m.len()];
    have[m.bottom()] = true;
    for &g in gens {
        have[g] = true;
    }
    loop {
        let mut changed = false;
        let current: Vec<usize> = m.elems().filter(|&x| have[x]).collect();
        for &x in &current {
            for r in m.quantale.elems() {
                let y = m.act(r, x);
                if !have[y] {
                    have[y] = true;
                    changed = true;
                }
            }
            for &z in &current {
                let y = m.join(x, z);
                if !have[y] {
                    have[y] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return have;
        }
    }
}

/// Enumerates every point of a module.
///
/// Candidate values are fixed on a module generating set and extended by the
/// forced formula `p(λ) = ⋁ { r & p(g) | r ⊗ g ≤ λ }`; the four point axioms
/// are then verified in full, so the generating-set optimization cannot
/// introduce spurious points. Results are sorted by value tuple.
pub fn points(m: &QModule, cap: u64) -> Result<Vec<ModulePoint>> {
    let q = &m.quantale;
    let gens = module_generators(m);
    let mut count: u64 = 1;
    for _ in &gens {
        count = count
            .checked_mul(q.len() as u64)
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

    // for each module element, the pairs (r, generator slot) with r ⊗ g ≤ λ
    let contributions: Vec<Vec<(Elem, usize)>> = m
        .elems()
        .map(|lam| {
            let mut pairs = Vec::new();
            for (gi, &g) in gens.iter().enumerate() {
                for r in q.elems() {
                    if m.leq[m.act(r, g)][lam] {
                        pairs.push((r, gi));
                    }
                }
            }
            pairs
        })
        .collect();

    let mut found: Vec<ModulePoint> = Vec::new();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut assignment = vec![0usize; gens.len()];
    'outer: loop {
        let values: Vec<Elem> = m
            .elems()
            .map(|lam| {
                q.join_all(
                    contributions[lam]
                        .iter()
                        .map(|&(r, gi)| q.mul(r, assignment[gi])),
                )
            })
            .collect();
        if satisfies_point_axioms(m, &values) && seen.insert(values.clone()) {
            found.push(ModulePoint { values });
        }
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < q.len() {
                break;
            }
            assignment[pos] = 0;
        }
    }
    found.sort();
    Ok(found)
}

fn satisfies_point_axioms(m: &QModule, p: &[Elem]) -> bool {
    let q = &m.quantale;
    if p[m.top()] != q.top() || p[m.bottom()] != q.bottom() {
        return false;
    }
    for a in m.elems() {
        for b in m.elems() {
            if p[m.meet(a, b)] != q.meet(p[a], p[b]) {
                return false;
            }
            if p[m.join(a, b)] != q.join(p[a], p[b]) {
                return false;
            }
        }
    }
    for r in q.elems() {
        for a in m.elems() {
            if p[m.act(r, a)] != q.mul(r, p[a]) {
                return false;
            }
        }
    }
    true
}

/// How a sobriety check can come out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SobrietyVerdict {
    Sober,
    /// Two distinct carrier points evaluate every open identically.
    NotT0 {
        x: usize,
        y: usize,
    },
    /// An abstract point of the open-set module realized by no carrier point.
    MissingPoint(ModulePoint),
}

/// The unit map `η(x)(λ) = λ(x)` together with the sobriety verdict.
#[derive(Debug, Clone)]
pub struct SobrietyCertificate {
    /// `η(x)` for each carrier point, in carrier order.
    pub eta: Vec<ModulePoint>,
    pub verdict: SobrietyVerdict,
}

impl SobrietyCertificate {
    pub fn is_sober(&self) -> bool {
        self.verdict == SobrietyVerdict::Sober
    }
}

/// Computes `η` and classifies the space: sober iff `η` is a bijection onto
/// the points of the open-set module. Injectivity failures surface first.
pub fn eta(t: &QTopSpace, cap: u64) -> Result<SobrietyCertificate> {
    let m = open_set_module(t)?;
    let pts = points(&m, cap)?;
    let eta: Vec<ModulePoint> = t
        .points()
        .map(|x| ModulePoint {
            values: t.opens.iter().map(|lam| lam.0[x]).collect(),
        })
        .collect();
    for x in t.points() {
        for y in x + 1..t.len() {
            if eta[x] == eta[y] {
                return Ok(SobrietyCertificate {
                    eta,
                    verdict: SobrietyVerdict::NotT0 { x, y },
                });
            }
        }
    }
    let realized: HashSet<&ModulePoint> = eta.iter().collect();
    if let Some(missing) = pts.iter().find(|p| !realized.contains(p)) {
        let verdict = SobrietyVerdict::MissingPoint(missing.clone());
        return Ok(SobrietyCertificate { eta, verdict });
    }
    Ok(SobrietyCertificate {
        eta,
        verdict: SobrietyVerdict::Sober,
    })
}

pub fn is_sober(t: &QTopSpace, cap: u64) -> Result<bool> {
    Ok(eta(t, cap)?.is_sober())
}

/// The space of points of the open-set module, with opens `λ̂(p) = p(λ)`.
/// Always sober; homeomorphic to the input via `η` exactly when the input
/// already is.
pub fn sobrify(t: &QTopSpace, cap: u64) -> Result<QTopSpace> {
    let m = open_set_module(t)?;
    let pts = points(&m, cap)?;
    let carrier = (0..pts.len()).map(|i| format!("p{i}")).collect();
    let opens = m
        .elems()
        .map(|lam| QFun(pts.iter().map(|p| p.values[lam]).collect()))
        .collect();
    QTopSpace::from_parts(t.quantale.clone(), carrier, opens)
}

/// Spatiality: the counit `λ ↦ λ̂` is a bijection onto the opens of the point
/// space that preserves joins, meets and the action.
pub fn is_spatial(m: &QModule, cap: u64) -> Result<bool> {
    let q = &m.quantale;
    let pts = points(m, cap)?;
    let hat: Vec<Vec<Elem>> = m
        .elems()
        .map(|lam| pts.iter().map(|p| p.values[lam]).collect())
        .collect();
    let distinct: HashSet<&Vec<Elem>> = hat.iter().collect();
    if distinct.len() != m.len() {
        return Ok(false);
    }
    for a in m.elems() {
        for b in m.elems() {
            let join_ok = hat[m.join(a, b)]
                .iter()
                .zip(hat[a].iter().zip(&hat[b]))
                .all(|(&j, (&x, &y))| j == q.join(x, y));
            let meet_ok = hat[m.meet(a, b)]
                .iter()
                .zip(hat[a].iter().zip(&hat[b]))
                .all(|(&j, (&x, &y))| j == q.meet(x, y));
            if !join_ok || !meet_ok {
                return Ok(false);
            }
        }
    }
    for r in q.elems() {
        for a in m.elems() {
            let act_ok = hat[m.act(r, a)]
                .iter()
                .zip(&hat[a])
                .all(|(&v, &x)| v == q.mul(x, r));
            if !act_ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
