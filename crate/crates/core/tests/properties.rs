mod common;

use braidkit::braided_space::{BraidedSpace, Marks};
use braidkit::linalg::Matrix;
use braidkit::quotients::symmetric_algebra;
use braidkit::scalars::q_binom;
use braidkit::tensor_engine::TruncatedTensorBialgebra;
use braidkit::FieldSpec;
use common::{rat, Fp};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-2i64..3, r * c)))
}

proptest! {
    #[test]
    fn rank_over_q_matches_oracle((r, c, values) in small_matrix()) {
        let m = Matrix::from_dense(Q, r, c, &values.iter().map(|&v| Q.from_i64(v)).collect::<Vec<_>>()).unwrap();
        let rows = values.chunks(c).map(|row| row.iter().map(|&v| rat(v)).collect()).collect();
        prop_assert_eq!(m.rank(), common::rank(rows));
    }

    #[test]
    fn rank_over_f5_matches_oracle((r, c, values) in small_matrix()) {
        let f5 = FieldSpec::Prime(5);
        let m = Matrix::from_dense(f5, r, c, &values.iter().map(|&v| f5.from_i64(v)).collect::<Vec<_>>()).unwrap();
        let rows = values.chunks(c).map(|row| row.iter().map(|&v| Fp::new(v, 5)).collect()).collect();
        prop_assert_eq!(m.rank(), common::rank(rows));
    }

    #[test]
    fn q_binom_symmetry_over_f7(n in 0u32..9, k in 0u32..9, l in 0i64..7) {
        let f7 = FieldSpec::Prime(7);
        let lambda = f7.from_i64(l);
        prop_assume!(k <= n);
        let a = q_binom(n, k, &lambda).unwrap();
        prop_assert_eq!(&a, &q_binom(n, n - k, &lambda).unwrap());
        prop_assert_eq!(a, f7.from_i64(common::q_binom_pascal(n, k, &Fp::new(l, 7)).v as i64));
    }

    #[test]
    fn dj_mark_is_q_squared(q in 1i64..6) {
        let space = BraidedSpace::dj_hecke(Q, 2, &Q.from_i64(q)).unwrap();
        let expected = if q == 1 { Q.one() } else { Q.from_i64(q * q) };
        prop_assert_eq!(space.hecke_analysis().marks, Marks::Finite(vec![expected]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_tensor_bialgebras_validate(entries in prop::collection::vec(prop_oneof![Just(-1i64), Just(1), Just(2), Just(3)], 4)) {
        let rows = vec![
            vec![Q.from_i64(entries[0]), Q.from_i64(entries[1])],
            vec![Q.from_i64(entries[2]), Q.from_i64(entries[3])],
        ];
        let space = BraidedSpace::diagonal(Q, &rows).unwrap();
        let t = TruncatedTensorBialgebra::new(&space, 3).to_bialgebra();
        let report = t.validate();
        prop_assert!(report.all_pass(), "{:?}", report.failures().next());
        let lhs = t.comul(1, 1) * t.mul(1, 1);
        prop_assert_eq!(lhs, &Matrix::identity(Q, 4) + space.braiding());
    }

    #[test]
    fn symmetric_dims_match_brute_force(q in 2i64..5) {
        let space = BraidedSpace::dj_hecke(Q, 2, &Q.from_i64(q)).unwrap();
        let s = symmetric_algebra(&space, &Q.from_i64(q * q), 4).unwrap();
        let oracle = common::symmetric_dims(2, &common::dj_matrix(2, &rat(q)), &rat(q * q), 4);
        prop_assert_eq!(s.dims(), oracle);
    }
}

#[test]
fn dj_in_dimension_three_matches_brute_force() {
    let space = BraidedSpace::dj_hecke(Q, 3, &Q.from_i64(2)).unwrap();
    let s = symmetric_algebra(&space, &Q.from_i64(4), 3).unwrap();
    let oracle = common::symmetric_dims(3, &common::dj_matrix(3, &rat(2)), &rat(4), 3);
    assert_eq!(oracle, vec![1, 3, 6, 10]);
    assert_eq!(s.dims(), oracle);
}

#[test]
fn oracle_dj_matrix_is_hecke() {
    let c = common::dj_matrix(2, &rat(3));
    let id = common::identity(4, &rat(1));
    let plus = common::sub(&c, &common::scale(&id, &rat(-1)));
    let minus = common::sub(&c, &common::scale(&id, &rat(9)));
    let product = common::matmul(&plus, &minus);
    assert!(product.iter().flatten().all(|x| *x == rat(0)));
}
