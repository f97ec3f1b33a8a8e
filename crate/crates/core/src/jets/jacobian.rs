use crate::groebner::{krull_dim, Budget, GroebnerError, Ideal};
use crate::par;
use crate::polyring::Poly;

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Determinant by cofactor expansion along the first row. Fine for the small
/// minors used here.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    if n == 2 {
        return &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    }
    let ring = m[0][0].ring();
    let mut acc = ring.zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &determinant(&sub);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The Jacobian matrix: row per generator, column per variable.
pub fn jacobian_matrix(ideal: &Ideal) -> Vec<Vec<Poly>> {
    let n = ideal.ring().nvars();
    ideal
        .gens()
        .iter()
        .map(|f| (0..n).map(|v| f.derivative(v)).collect())
        .collect()
}

/// `I + (c×c minors of the Jacobian)` with `c` the codimension of `I`.
///
/// For complete intersections this cuts out the singular locus; in general
/// its zero set contains the singular locus.
pub fn jacobian_ideal(ideal: &Ideal, budget: &Budget) -> Result<Ideal, GroebnerError> {
    if ideal.is_zero_ideal() {
        return Err(GroebnerError::Precondition("Jacobian ideal of the zero ideal".into()));
    }
    let dim = krull_dim(ideal, budget)?;
    if dim.dim < 0 {
        return Err(GroebnerError::Precondition("Jacobian ideal of the unit ideal".into()));
    }
    let n = ideal.ring().nvars();
    let c = n - dim.dim as usize;
    let jac = jacobian_matrix(ideal);
    let rows = combinations(jac.len(), c);
    let cols = combinations(n, c);
    let picks: Vec<(&Vec<usize>, &Vec<usize>)> = rows.iter().flat_map(|r| cols.iter().map(move |c| (r, c))).collect();
    let minors = par::map(&picks, budget.parallelism, |(r, cs)| {
        let sub: Vec<Vec<Poly>> = r
            .iter()
            .map(|&i| cs.iter().map(|&j| jac[i][j].clone()).collect())
            .collect();
        determinant(&sub)
    });
    Ok(ideal.with_generators(minors)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolyRing;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn determinant_of_three_by_three() {
        let r = PolyRing::rational(["a", "b"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let m = vec![
            vec![p("a"), p("1"), p("0")],
            vec![p("0"), p("b"), p("2")],
            vec![p("1"), p("0"), p("a")],
        ];
        // a(ab - 0) - 1(0 - 2) + 0 = a^2 b + 2
        assert_eq!(determinant(&m), p("a^2*b + 2"));
    }
}
