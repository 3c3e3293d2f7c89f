//! Helpers for finite lattices presented as a `leq` relation matrix.
//!
//! Everything here is best-effort on malformed input: the `check_*` functions
//! report violations, while the table builders fall back to arbitrary picks so
//! that validation itself never panics.

use crate::report::ValidationReport;

/// Derived lookup tables for a finite bounded lattice.
#[derive(Debug, Clone)]
pub(crate) struct LatticeTables {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

/// Least upper bound of `a` and `b` under `leq`, if one exists.
pub(crate) fn lub(leq: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let uppers: Vec<usize> = (0..n).filter(|&z| leq[a][z] && leq[b][z]).collect();
    uppers
        .iter()
        .copied()
        .find(|&z| uppers.iter().all(|&u| leq[z][u]))
}

/// Greatest lower bound of `a` and `b` under `leq`, if one exists.
pub(crate) fn glb(leq: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let lowers: Vec<usize> = (0..n).filter(|&z| leq[z][a] && leq[z][b]).collect();
    lowers
        .iter()
        .copied()
        .find(|&z| lowers.iter().all(|&l| leq[l][z]))
}

pub(crate) fn bottom(leq: &[Vec<bool>]) -> Option<usize> {
    let n = leq.len();
    (0..n).find(|&b| (0..n).all(|x| leq[b][x]))
}

pub(crate) fn top(leq: &[Vec<bool>]) -> Option<usize> {
    let n = leq.len();
    (0..n).find(|&t| (0..n).all(|x| leq[x][t]))
}

/// Builds join/meet/bound tables, substituting index 0 where no bound exists.
/// Only meaningful once `check_partial_order` and `check_lattice` are clean.
pub(crate) fn tables(leq: &[Vec<bool>]) -> LatticeTables {
    let n = leq.len();
    let mut join = vec![vec![0usize; n]; n];
    let mut meet = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            join[a][b] = lub(leq, a, b).unwrap_or(0);
            meet[a][b] = glb(leq, a, b).unwrap_or(0);
        }
    }
    LatticeTables {
        join,
        meet,
        bottom: bottom(leq).unwrap_or(0),
        top: top(leq).unwrap_or(n.saturating_sub(1)),
    }
}

/// Checks that `leq` is a partial order; witnesses use the supplied names.
pub(crate) fn check_partial_order(leq: &[Vec<bool>], names: &[String], out: &mut ValidationReport) {
    let n = leq.len();
    for x in 0..n {
        if !leq[x][x] {
            out.push("order-reflexivity", format!("{} ≰ {}", names[x], names[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && leq[x][y] && leq[y][x] {
                out.push(
                    "order-antisymmetry",
                    format!(
                        "{} ≤ {} and {} ≤ {}",
                        names[x], names[y], names[y], names[x]
                    ),
                );
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if leq[x][y] && leq[y][z] && !leq[x][z] {
                    out.push(
                        "order-transitivity",
                        format!(
                            "{} ≤ {} ≤ {} but {} ≰ {}",
                            names[x], names[y], names[z], names[x], names[z]
                        ),
                    );
                }
            }
        }
    }
}

/// Checks that every pair has a least upper and greatest lower bound and that
/// global bounds exist. On a finite carrier this makes the order a complete
/// lattice.
pub(crate) fn check_lattice(leq: &[Vec<bool>], names: &[String], out: &mut ValidationReport) {
    let n = leq.len();
    for a in 0..n {
        for b in a..n {
            if lub(leq, a, b).is_none() {
                out.push(
                    "join-existence",
                    format!("{} ∨ {} undefined", names[a], names[b]),
                );
            }
            if glb(leq, a, b).is_none() {
                out.push(
                    "meet-existence",
                    format!("{} ∧ {} undefined", names[a], names[b]),
                );
            }
        }
    }
    if bottom(leq).is_none() {
        out.push("bottom-existence", "no least element".to_string());
    }
    if top(leq).is_none() {
        out.push("top-existence", "no greatest element".to_string());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn chain_is_a_lattice() {
        let leq = chain(4);
        let mut rep = ValidationReport::new();
        check_partial_order(&leq, &names(4), &mut rep);
        check_lattice(&leq, &names(4), &mut rep);
        assert!(rep.is_valid(), "{rep}");
        let t = tables(&leq);
        assert_eq!(t.bottom, 0);
        assert_eq!(t.top, 3);
        assert_eq!(t.join[1][2], 2);
        assert_eq!(t.meet[1][2], 1);
    }

    #[test]
    fn antichain_pair_has_no_bounds() {
        // two incomparable points: no joins, no global bounds
        let leq = vec![vec![true, false], vec![false, true]];
        let mut rep = ValidationReport::new();
        check_partial_order(&leq, &names(2), &mut rep);
        assert!(rep.is_valid());
        check_lattice(&leq, &names(2), &mut rep);
        assert!(rep.mentions("join-existence"));
        assert!(rep.mentions("bottom-existence"));
    }
}
