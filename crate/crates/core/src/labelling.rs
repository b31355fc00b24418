//! L(2,1) labelling numbers through path covers of the complement.
//!
//! If the complement splits into `r` paths, labelling each path with
//! consecutive integers and leaving a gap of one label between paths gives a
//! labelling with largest label `n + r - 2`; this is optimal for `r >= 2`.

use std::fmt;

use crate::constructor::min_path_cover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::SolverConfig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labelling {
    pub labels: Vec<usize>,
}

impl Labelling {
    pub fn max_label(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// A labelling number, or only an upper bound when the complement has a
/// Hamiltonian path and distance-three pairs may share labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaValue {
    Exact(usize),
    AtMost(usize),
}

impl fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaValue::Exact(v) => write!(f, "{v}"),
            LambdaValue::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    pub value: LambdaValue,
    pub complement_pc: usize,
    pub witness: Labelling,
}

/// Checks the distance-one gap of 2, the distance-two gap of 1, and
/// injectivity when asked.
pub fn verify_labelling(g: &Graph, lab: &Labelling, injective: bool) -> bool {
    let n = g.n();
    if lab.labels.len() != n {
        return false;
    }
    let f = &lab.labels;
    for u in 0..n {
        for v in u + 1..n {
            let gap = f[u].abs_diff(f[v]);
            if g.has_edge(u, v) {
                if gap < 2 {
                    return false;
                }
            } else if gap == 0 && (injective || g.neighbors(u).iter().any(|&w| g.has_edge(w, v))) {
                return false;
            }
        }
    }
    true
}

fn via_complement(g: &Graph, cfg: &SolverConfig) -> Result<(usize, Labelling)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let cover = min_path_cover(&g.complement(), cfg)?;
    let mut labels = vec![0; n];
    let mut next = 0;
    for (i, path) in cover.iter().enumerate() {
        if i > 0 {
            next += 1;
        }
        for &v in path {
            labels[v] = next;
            next += 1;
        }
    }
    let lab = Labelling { labels };
    if !verify_labelling(g, &lab, true) {
        return Err(Error::InvariantViolation(
            "labelling built from the path cover is invalid".into(),
        ));
    }
    Ok((cover.len(), lab))
}

/// Injective labelling number: `n - 1` when the complement has a Hamiltonian
/// path, otherwise `n + r - 2` with `r` the complement's path cover number.
pub fn lambda_prime_via_pc(g: &Graph, cfg: &SolverConfig) -> Result<LambdaReport> {
    let (r, witness) = via_complement(g, cfg)?;
    Ok(LambdaReport {
        value: LambdaValue::Exact(witness.max_label()),
        complement_pc: r,
        witness,
    })
}

/// Labelling number: exact `n + r - 2` when `r >= 2`, else the bound `n - 1`.
pub fn lambda_via_pc(g: &Graph, cfg: &SolverConfig) -> Result<LambdaReport> {
    let (r, witness) = via_complement(g, cfg)?;
    let top = witness.max_label();
    let value = if r >= 2 {
        LambdaValue::Exact(top)
    } else {
        LambdaValue::AtMost(top)
    };
    Ok(LambdaReport {
        value,
        complement_pc: r,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: &[usize]) -> Labelling {
        Labelling { labels: v.to_vec() }
    }

    #[test]
    fn verify_examples() {
        let k3 = Graph::complete(3);
        assert!(verify_labelling(&k3, &lab(&[0, 2, 4]), false));
        assert!(!verify_labelling(&k3, &lab(&[0, 1, 4]), false));
        assert!(!verify_labelling(&Graph::path(3), &lab(&[0, 2, 0]), false));
        assert!(verify_labelling(
            &Graph::path(4),
            &lab(&[0, 2, 4, 0]),
            false
        ));
        assert!(!verify_labelling(
            &Graph::path(4),
            &lab(&[0, 2, 4, 0]),
            true
        ));
    }

    #[test]
    fn prime_values() {
        let cfg = SolverConfig::default();
        let v = |g: Graph| lambda_prime_via_pc(&g, &cfg).unwrap().value;
        assert_eq!(v(Graph::complete(3)), LambdaValue::Exact(4));
        assert_eq!(v(Graph::path(3)), LambdaValue::Exact(3));
        assert_eq!(v(Graph::path(4)), LambdaValue::Exact(3));
    }

    #[test]
    fn plain_values() {
        let cfg = SolverConfig::default();
        let r = lambda_via_pc(&Graph::cycle(4), &cfg).unwrap();
        assert_eq!((r.value, r.complement_pc), (LambdaValue::Exact(4), 2));
        assert_eq!(
            lambda_via_pc(&Graph::complete(2), &cfg).unwrap().value,
            LambdaValue::Exact(2)
        );
        let p4 = lambda_via_pc(&Graph::path(4), &cfg).unwrap();
        assert_eq!(p4.value, LambdaValue::AtMost(3));
        assert_eq!(p4.value.to_string(), "<= 3");
    }
}
