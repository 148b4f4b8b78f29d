//! Exterior powers of a finite-dimensional space in the basis `e_S`, `S` a
//! sorted `k`-subset.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

const RANK_TOLERANCE: f64 = 1e-9;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn index_of(subsets: &[Vec<usize>], s: &[usize]) -> usize {
    subsets
        .binary_search_by(|x| x.as_slice().cmp(s))
        .expect("subset present")
}

/// Sign of `e_S ∧ e_{Sᶜ}` relative to `e₀ ∧ … ∧ e_{n−1}`.
fn complement_sign(s: &[usize]) -> f64 {
    let inversions: usize = s.iter().enumerate().map(|(i, &x)| x - i).sum();
    if inversions.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn numerical_rank(m: &DMatrix<f64>) -> usize {
    if m.ncols() == 0 || m.nrows() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&x| x > RANK_TOLERANCE * top.max(1.0)).count()
}

/// Annihilator of `W ⊂ ∧ᵏ` under the wedge pairing `∧ᵏ × ∧ⁿ⁻ᵏ → ∧ⁿ`,
/// returned as an orthonormal column basis in `∧ⁿ⁻ᵏ`. The columns of `w`
/// must be linearly independent.
pub fn exterior_orth_complement(w: &DMatrix<f64>, n: usize, k: usize) -> Result<DMatrix<f64>> {
    if k > n {
        return Err(Error::Unsupported(format!("k = {k} exceeds n = {n}")));
    }
    let source = k_subsets(n, k);
    let target = k_subsets(n, n - k);
    if w.nrows() != source.len() {
        return Err(Error::DimensionMismatch {
            expected: source.len(),
            got: w.nrows(),
        });
    }
    if numerical_rank(w) < w.ncols() {
        return Err(Error::RankDeficient(format!(
            "{} spanning vectors of rank {}",
            w.ncols(),
            numerical_rank(w)
        )));
    }
    let cols = target.len();
    // Padded to a square so the SVD returns a full right basis.
    let rows = w.ncols().max(cols);
    let mut pairing = DMatrix::<f64>::zeros(rows, cols);
    for (si, s) in source.iter().enumerate() {
        let comp: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        let t = index_of(&target, &comp);
        let sign = complement_sign(s);
        for c in 0..w.ncols() {
            pairing[(c, t)] += sign * w[(si, c)];
        }
    }
    let svd = pairing.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let top = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let null: Vec<usize> = (0..cols)
        .filter(|&i| svd.singular_values[i] <= RANK_TOLERANCE * top.max(1.0))
        .collect();
    let mut out = DMatrix::<f64>::zeros(cols, null.len());
    for (c, &i) in null.iter().enumerate() {
        out.set_column(c, &v_t.row(i).transpose());
    }
    Ok(out)
}

/// Matrix of the derivation induced by `x` on `∧ᵏ`:
/// `e_{s₁} ∧ … ∧ e_{s_k} ↦ Σ_j e_{s₁} ∧ … ∧ x·e_{s_j} ∧ … ∧ e_{s_k}`.
pub fn exterior_derivation(x: &DMatrix<f64>, k: usize) -> DMatrix<f64> {
    let n = x.nrows();
    let subsets = k_subsets(n, k);
    let mut out = DMatrix::<f64>::zeros(subsets.len(), subsets.len());
    for (ci, s) in subsets.iter().enumerate() {
        for (j, &sj) in s.iter().enumerate() {
            for r in 0..n {
                let a = x[(r, sj)];
                if a == 0.0 || (r != sj && s.contains(&r)) {
                    continue;
                }
                let mut t = s.clone();
                t[j] = r;
                // Moving r into sorted position costs one swap per element passed.
                let passed = s
                    .iter()
                    .filter(|&&v| v != sj && ((sj < v && v < r) || (r < v && v < sj)))
                    .count();
                t.sort_unstable();
                let sign = if passed % 2 == 0 { 1.0 } else { -1.0 };
                out[(index_of(&subsets, &t), ci)] += sign * a;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::max_abs;

    fn basis_vector(len: usize, i: usize) -> DMatrix<f64> {
        let mut v = DMatrix::<f64>::zeros(len, 1);
        v[(i, 0)] = 1.0;
        v
    }

    fn span_contains(basis: &DMatrix<f64>, v: &DMatrix<f64>) -> bool {
        let proj = basis * (basis.transpose() * v);
        max_abs(&(proj - v)) < 1e-9
    }

    #[test]
    fn subsets_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(5, 3).len(), 10);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn complement_of_whole_space_is_zero() {
        for (n, k) in [(4, 2), (5, 2), (5, 3), (3, 1)] {
            let d = k_subsets(n, k).len();
            let c = exterior_orth_complement(&DMatrix::identity(d, d), n, k).unwrap();
            assert_eq!(c.ncols(), 0);
        }
    }

    #[test]
    fn complement_of_a_line_in_wedge_two() {
        // e₀∧e₁ annihilates every e_T except e₂∧e₃.
        let w = basis_vector(6, 0);
        let c = exterior_orth_complement(&w, 4, 2).unwrap();
        assert_eq!(c.ncols(), 5);
        assert!(span_contains(&c, &basis_vector(6, 0)));
        assert!(!span_contains(&c, &basis_vector(6, 5)));
    }

    #[test]
    fn double_complement_is_original() {
        let w = DMatrix::from_row_slice(10, 2, &[
            1.0, 0.0, 2.0, 1.0, 0.0, -1.0, 0.5, 0.0, 0.0, 3.0, //
            1.0, 1.0, 0.0, 0.0, -2.0, 0.0, 0.0, 1.0, 1.0, 0.0,
        ]);
        let c = exterior_orth_complement(&w, 5, 2).unwrap();
        assert_eq!(c.ncols(), 8);
        let cc = exterior_orth_complement(&c, 5, 3).unwrap();
        assert_eq!(cc.ncols(), 2);
        for j in 0..2 {
            assert!(span_contains(&cc, &w.columns(j, 1).into_owned()));
        }
    }

    #[test]
    fn rank_deficient_input_rejected() {
        let w = DMatrix::from_row_slice(6, 2, &[1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            exterior_orth_complement(&w, 4, 2),
            Err(Error::RankDeficient(_))
        ));
    }

    #[test]
    fn derivation_is_a_lie_homomorphism() {
        let x = DMatrix::from_fn(4, 4, |i, j| (i * 3 + j * 7 % 5) as f64 - 2.0);
        let y = DMatrix::from_fn(4, 4, |i, j| ((i + 2 * j) % 3) as f64 - 1.0);
        for k in 0..=4 {
            let bracket = exterior_derivation(&(&x * &y - &y * &x), k);
            let dx = exterior_derivation(&x, k);
            let dy = exterior_derivation(&y, k);
            assert!(max_abs(&(bracket - (&dx * &dy - &dy * &dx))) < 1e-9, "k={k}");
        }
    }

    #[test]
    fn derivation_trace_and_top_power() {
        let x = DMatrix::from_fn(4, 4, |i, j| (i as f64) - 2.0 * (j as f64) + 1.0);
        assert!(max_abs(&(exterior_derivation(&x, 1) - &x)) < 1e-12);
        let top = exterior_derivation(&x, 4);
        assert!((top[(0, 0)] - x.trace()).abs() < 1e-12);
    }

    #[test]
    fn invariant_subspaces_have_invariant_complements() {
        // span(e₀∧e₁) is stable under the upper-triangular x, so its
        // annihilator is stable under the induced action on ∧².
        let x = DMatrix::from_fn(4, 4, |i, j| if i <= j { (i + j + 1) as f64 } else { 0.0 });
        let w = basis_vector(6, 0);
        let dx = exterior_derivation(&x, 2);
        assert!(span_contains(&w, &(&dx * &w)));
        let c = exterior_orth_complement(&w, 4, 2).unwrap();
        let image = &dx * &c;
        for j in 0..c.ncols() {
            assert!(span_contains(&c, &image.columns(j, 1).into_owned()));
        }
    }
}
