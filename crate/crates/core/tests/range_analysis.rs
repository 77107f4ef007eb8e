use std::f64::consts::PI;

use nalgebra::DMatrix;
use proptest::prelude::*;
use weighted_cauchy::poly_bergman::{projection_coefficient_closed, CoefficientSequence, LevelBasis};
use weighted_cauchy::range_analysis::{
    e_ell_indices, index_set_relation, pn_cauchy_on_coeffs, pn_cauchy_on_tilde_coeffs, psi_gram, range_basis_indices,
    range_window, total_degree_indices, truncated_operator_matrix, truncated_operator_svd, GramTolerances,
    RangeBasisSpec, RangeVariant, SetRelation, MAX_TRUNCATION_DEGREE,
};
use weighted_cauchy::special_fn::factorial;
use weighted_cauchy::svd::{singular_values, DenseMatrix};
use weighted_cauchy::{cauchy_hermite_closed, Complex64, Error, GridOptions, HermiteIndex, PolarGrid};

fn idx(m: u32, n: u32) -> HermiteIndex {
    HermiteIndex::classical(m, n)
}

fn spec(variant: RangeVariant, ell: u32, n: u32) -> RangeBasisSpec {
    RangeBasisSpec { variant, ell, n }
}

fn nalgebra_singular_values(a: &DenseMatrix) -> Vec<f64> {
    let m = DMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j));
    let mut s: Vec<f64> = m.singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

#[test]
fn range_examples() {
    assert_eq!(range_basis_indices(spec(RangeVariant::RTilde, 2, 1), 0), vec![idx(0, 1), idx(1, 1), idx(2, 1)]);
    assert!(range_basis_indices(spec(RangeVariant::RTilde, 0, 0), 10).is_empty());
    // R^0_2 starts at H_{1,2}; R^3_1 starts at H_{0,1}
    assert_eq!(range_basis_indices(spec(RangeVariant::R, 0, 2), 2), vec![idx(1, 2), idx(2, 2)]);
    assert_eq!(range_basis_indices(spec(RangeVariant::R, 3, 1), 2), vec![idx(0, 1), idx(1, 1)]);
    assert_eq!(e_ell_indices(0, 3), vec![idx(0, 0), idx(1, 1), idx(2, 2)]);
    assert_eq!(e_ell_indices(2, 2), vec![idx(0, 2), idx(1, 3)]);
    assert_eq!(e_ell_indices(-1, 2), vec![idx(1, 0), idx(2, 1)]);
}

#[test]
fn tilde_dimensions() {
    for ell in 0..=10 {
        for n in 0..=10 {
            if ell + n <= 10 {
                assert_eq!(range_basis_indices(spec(RangeVariant::RTilde, ell, n), 0).len(), (ell + n) as usize);
            }
        }
    }
}

#[test]
fn inclusions_across_levels_of_the_source() {
    // the spanning sets of R^ℓ_n grow with ℓ until ℓ >= n - 1 and are then constant
    for n in 0..=6 {
        for ell in 0..=6 {
            let a = range_window(spec(RangeVariant::R, ell, n), 12);
            let b = range_window(spec(RangeVariant::R, ell + 1, n), 12);
            let expected = if ell + 1 < n { SetRelation::StrictSubset } else { SetRelation::Equal };
            assert_eq!(index_set_relation(&a, &b), expected, "ℓ={ell} n={n}");
            let ta = range_window(spec(RangeVariant::RTilde, ell, n), 32);
            let tb = range_window(spec(RangeVariant::RTilde, ell + 1, n), 32);
            assert_eq!(index_set_relation(&ta, &tb), SetRelation::StrictSubset);
        }
    }
    assert_eq!(index_set_relation(&[idx(0, 0)], &[idx(1, 0)]), SetRelation::Incomparable);
    assert_eq!(index_set_relation(&[idx(0, 0), idx(1, 0)], &[idx(1, 0)]), SetRelation::StrictSuperset);
}

#[test]
fn coefficient_route_matches_quadrature_route() {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let coeffs =
        vec![Complex64::new(0.3, -0.2), Complex64::new(-1.0, 0.5), Complex64::new(0.0, 0.7), Complex64::new(0.9, 0.0)];
    for ell in 0..=4 {
        let seq = CoefficientSequence::new(ell, coeffs.clone());
        for n in 0..=4 {
            let closed = pn_cauchy_on_coeffs(&seq, n);
            let numeric = LevelBasis::new(&grid, n, 9).project(|z| {
                coeffs.iter().enumerate().map(|(j, &a)| a * cauchy_hermite_closed(j as u32, ell, z)).sum()
            });
            for i in 0..numeric.len() {
                assert!((closed.get(i) - numeric.get(i)).norm() < 1e-8, "ℓ={ell} n={n} i={i}");
            }
            let tilde = pn_cauchy_on_tilde_coeffs(ell, &coeffs, n);
            let numeric = LevelBasis::new(&grid, n, 9).project(|z| {
                coeffs.iter().enumerate().map(|(k, &b)| b * cauchy_hermite_closed(ell, k as u32, z)).sum()
            });
            for i in 0..numeric.len() {
                assert!((tilde.get(i) - numeric.get(i)).norm() < 1e-8, "tilde ℓ={ell} n={n} i={i}");
            }
        }
    }
}

#[test]
fn gram_selection_rule_and_blocks() {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let indices: Vec<_> = (0..=5).flat_map(|m| (0..=5).map(move |n| idx(m, n))).collect();
    let rep = psi_gram(&indices, &grid, GramTolerances::default()).unwrap();
    assert!(rep.pass && rep.radial_pass);
    assert_eq!(rep.index_pairs().len(), indices.len() * indices.len());
    for a in 0..indices.len() {
        for b in 0..indices.len() {
            // Hermitian, with a real diagonal
            assert!((rep.values[a][b] - rep.values[b][a].conj()).norm() < 1e-13);
        }
        assert!(rep.values[a][a].re > 0.0);
    }
    let p = |m, n| indices.iter().position(|&i| i == idx(m, n)).unwrap();
    assert!((rep.values[p(1, 0)][p(1, 0)].re - PI / 3.0).abs() < 1e-8 * PI / 3.0);
    assert!((rep.values[p(2, 0)][p(2, 0)].re - PI / 9.0).abs() < 1e-8 * PI / 9.0);
    for l1 in -2i64..=2 {
        for l2 in -2i64..=2 {
            if l1 == l2 {
                continue;
            }
            let mut set = e_ell_indices(l1, 4);
            set.extend(e_ell_indices(l2, 4));
            let rep = psi_gram(&set, &grid, GramTolerances::default()).unwrap();
            for a in 0..4 {
                for b in 4..8 {
                    assert!(rep.values[a][b].norm() < 1e-9, "E_{l1} vs E_{l2}");
                }
            }
        }
    }
}

#[test]
fn gram_rejects_extended_indices() {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let ext = HermiteIndex::new(-1, 0).unwrap();
    assert!(psi_gram(&[ext], &grid, GramTolerances::default()).is_err());
}

#[test]
fn truncated_matrix_entries_are_projection_coefficients() {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    let basis = total_degree_indices(6);
    assert_eq!(basis.len(), 28);
    let a = truncated_operator_matrix(6, &grid).unwrap();
    for (r, row) in basis.iter().enumerate() {
        for (c, col) in basis.iter().enumerate() {
            let (m, n) = row.as_classical().unwrap();
            let (j, k) = col.as_classical().unwrap();
            let term = projection_coefficient_closed(n, j, k);
            let expected = match term.target {
                Some(t) if t == *row => {
                    term.coefficient * ((factorial(m) * factorial(n)) / (factorial(j) * factorial(k))).sqrt()
                }
                _ => 0.0,
            };
            assert!((a.get(r, c) - expected).abs() < 1e-10, "row {row} col {col}: {} vs {expected}", a.get(r, c));
        }
    }
}

#[test]
fn truncation_examples_and_errors() {
    let s0 = truncated_operator_svd(0).unwrap();
    assert_eq!(s0.len(), 1);
    assert!(s0[0].abs() < 1e-15);
    let s1 = truncated_operator_svd(1).unwrap();
    assert!(s1.iter().any(|v| (v - 0.5).abs() < 1e-12), "{s1:?}");
    assert_eq!(truncated_operator_svd(MAX_TRUNCATION_DEGREE + 1), Err(Error::DegreeTooLarge(13)));
    let grid = PolarGrid::new(16, 16, 2.0).unwrap();
    assert_eq!(truncated_operator_matrix(2, &grid), Err(Error::InvalidBeta(2.0)));
}

#[test]
fn singular_values_interlace_across_degrees() {
    let all: Vec<Vec<f64>> = (0..=8).map(|d| truncated_operator_svd(d).unwrap()).collect();
    for d in 1..all.len() {
        for (k, (&prev, &next)) in all[d - 1].iter().zip(&all[d]).enumerate() {
            assert!(next >= prev - 1e-12, "s_{k} dropped from {prev} to {next} at D={d}");
        }
    }
    let s8 = &all[8];
    assert!(s8.iter().all(|v| v.is_finite() && *v >= 0.0));
    assert!(s8.windows(2).all(|w| w[0] >= w[1]));
    // the operator is a contraction on the truncations
    assert!(s8[0] < 1.0);
}

#[test]
fn jacobi_svd_matches_nalgebra_on_operator_truncations() {
    let grid = GridOptions::default().polar_grid(1.0).unwrap();
    for d in [2, 5, 8] {
        let a = truncated_operator_matrix(d, &grid).unwrap();
        let ours = singular_values(&a);
        let oracle = nalgebra_singular_values(&a);
        for (x, y) in ours.iter().zip(&oracle) {
            assert!((x - y).abs() < 1e-12, "D={d}: {x} vs {y}");
        }
    }
}

fn coefficient() -> impl Strategy<Value = Complex64> {
    prop_oneof![Just(Complex64::new(0.0, 0.0)), (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Complex64::new(a, b)),]
}

proptest! {
    #[test]
    fn jacobi_svd_matches_nalgebra(rows in 1usize..9, cols in 1usize..9, seed in proptest::collection::vec(-3.0f64..3.0, 64)) {
        let data: Vec<Vec<f64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 8 + j]).collect()).collect();
        let a = DenseMatrix::from_rows(&data);
        let ours = singular_values(&a);
        let oracle = nalgebra_singular_values(&a);
        prop_assert_eq!(ours.len(), rows.min(cols));
        let scale = oracle[0].max(1.0);
        for (x, y) in ours.iter().zip(&oracle) {
            prop_assert!((x - y).abs() <= 1e-11 * scale);
        }
    }

    #[test]
    fn support_lies_in_range_set(ell in 0u32..=4, n in 0u32..=4, coeffs in proptest::collection::vec(coefficient(), 1..12)) {
        let out = pn_cauchy_on_coeffs(&CoefficientSequence::new(ell, coeffs), n);
        let allowed = range_basis_indices(spec(RangeVariant::R, ell, n), out.len() + 1);
        for i in out.support() {
            prop_assert!(allowed.contains(&i));
        }
    }

    #[test]
    fn tilde_support_lies_in_tilde_set(ell in 0u32..=5, n in 0u32..=5, betas in proptest::collection::vec(coefficient(), 1..15)) {
        let out = pn_cauchy_on_tilde_coeffs(ell, &betas, n);
        let allowed = range_basis_indices(spec(RangeVariant::RTilde, ell, n), 0);
        for i in out.support() {
            prop_assert!(allowed.contains(&i));
        }
    }
}
