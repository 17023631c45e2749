use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use qbias::numeric::evaluate_numeric;
use qbias::qfunc::euler_product;
use qbias::{Exec, Series, TruncatedSeries};

const N: usize = 24;

fn series() -> impl Strategy<Value = Series<BigInt>> {
    prop::collection::vec(-50i64..50, N + 1).prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect()).unwrap())
}

fn unit_series() -> impl Strategy<Value = Series<BigInt>> {
    (series(), prop::bool::ANY).prop_map(|(mut s, neg)| {
        s.set_coeff(0, BigInt::from(if neg { -1 } else { 1 }));
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn parallel_product_matches(a in series(), b in series()) {
        prop_assert_eq!(a.mul_with(&b, Exec::Parallel), a.mul_with(&b, Exec::Sequential));
    }

    #[test]
    fn inverse_of_unit(a in unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(N));
    }
}

#[test]
fn geometric_sum_at_half() {
    let mut s = Series::<BigInt>::one(60);
    s.set_coeff(1, BigInt::from(-1));
    let e = evaluate_numeric(&TruncatedSeries::Integer(s.invert().unwrap()), Complex64::new(0.5, 0.0)).unwrap();
    assert!((e.value.re - 2.0).abs() < 1e-12);
}

#[test]
fn euler_inverse_matches_direct_product() {
    let inv = euler_product(50).invert().unwrap();
    let e = evaluate_numeric(&TruncatedSeries::Integer(inv), Complex64::new(0.1, 0.0)).unwrap();
    let direct: f64 = (1..200).map(|j| 1.0 / (1.0 - 0.1f64.powi(j))).product();
    assert!(!e.tail_flag);
    assert!((e.value.re - direct).abs() < 1e-12);
}

#[test]
fn outside_disc_is_rejected() {
    let s = TruncatedSeries::Integer(Series::one(5));
    assert!(evaluate_numeric(&s, Complex64::new(1.0, 0.0)).is_err());
}
