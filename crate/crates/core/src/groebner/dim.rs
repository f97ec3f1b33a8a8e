use std::time::{Duration, Instant};

use super::{Budget, GroebnerError, Ideal};

/// Krull dimension of `k[vars]/I` with a certifying independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    /// `-1` for the unit ideal.
    pub dim: i64,
    /// A maximal set `S` of variables with `in(I) ∩ k[S] = 0`.
    pub witness: Vec<String>,
    pub basis_size: usize,
    pub elapsed: Duration,
}

/// Largest variable set containing the support of no leading monomial.
///
/// Depth-first over variables in index order, trying "include" first, so the
/// witness is the lexicographically first maximum set.
pub fn max_independent_set(nvars: usize, leading_supports: &[u64]) -> Vec<usize> {
    assert!(nvars <= 64, "independent-set search supports at most 64 variables");
    // keep only inclusion-minimal supports
    let mut masks: Vec<u64> = leading_supports.to_vec();
    masks.sort_by_key(|m| m.count_ones());
    masks.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&s| s & !m == 0) {
            minimal.push(m);
        }
    }

    struct Search<'a> {
        n: usize,
        masks: &'a [u64],
        best: u64,
        best_len: u32,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, set: u64) {
            let len = set.count_ones();
            if len + (self.n - i) as u32 <= self.best_len {
                return;
            }
            if i == self.n {
                if len > self.best_len {
                    self.best = set;
                    self.best_len = len;
                }
                return;
            }
            let with = set | (1 << i);
            if !self.masks.iter().any(|&m| m & !with == 0) {
                self.go(i + 1, with);
            }
            self.go(i + 1, set);
        }
    }
    let mut s = Search {
        n: nvars,
        masks: &minimal,
        best: 0,
        best_len: 0,
    };
    s.go(0, 0);
    (0..nvars).filter(|i| s.best & (1 << i) != 0).collect()
}

/// Dimension via the leading monomials of the reduced basis in the ring's order.
pub fn krull_dim(ideal: &Ideal, budget: &Budget) -> Result<DimReport, GroebnerError> {
    let start = Instant::now();
    let gb = ideal.groebner(budget)?;
    let ring = ideal.ring();
    if gb.is_unit() {
        return Ok(DimReport {
            dim: -1,
            witness: Vec::new(),
            basis_size: 1,
            elapsed: start.elapsed(),
        });
    }
    if ring.nvars() > 64 {
        return Err(GroebnerError::Precondition(
            "dimension search supports at most 64 variables".into(),
        ));
    }
    let supports: Vec<u64> = gb
        .elements()
        .iter()
        .map(|g| g.leading_monomial().unwrap().support_mask())
        .collect();
    let set = max_independent_set(ring.nvars(), &supports);
    Ok(DimReport {
        dim: set.len() as i64,
        witness: set.iter().map(|&i| ring.vars()[i].clone()).collect(),
        basis_size: gb.len(),
        elapsed: start.elapsed(),
    })
}
