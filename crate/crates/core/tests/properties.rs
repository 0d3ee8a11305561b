use lerchlab::closedform::{eval_theorem, validate_params, Family, FamilyTag, Params};
use lerchlab::oracle::{gen_harmonic, sum_estimate, Accel, HarmonicKind, SumConfig};
use lerchlab::specfun::{lerch_phi, LerchPoint, Rational, Sign};
use proptest::prelude::*;

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Minus), Just(Sign::Plus)]
}

fn ulp(x: f64) -> f64 {
    f64::EPSILON * x.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn harmonic_prefixes_telescope(k in 2u64..1_000_000, p in 1u32..6, b in sign()) {
        let hk = gen_harmonic(HarmonicKind::H, k, p, b).value;
        let hp = gen_harmonic(HarmonicKind::H, k - 1, p, b).value;
        let term = b.pow(k as i64 - 1).f() / (k as f64).powi(p as i32);
        prop_assert!(((hk - hp) - term).abs() <= 2.0 * ulp(hk.abs().max(hp.abs())));
    }

    #[test]
    fn validator_is_total(
        tag in 0usize..10, p in 0u32..14, q in 0u32..14, n in 0u32..6, a in sign(), b in sign()
    ) {
        let f = Family::all()[tag % Family::all().len()];
        let pr = Params::new(p, q, n, a, b);
        let v = validate_params(f, pr);
        prop_assert_eq!(v.ok, v.reason.is_none());
        prop_assert_eq!(v.ok, eval_theorem(f, pr).is_ok());
    }

    #[test]
    fn phi_duplication(c in sign(), q in 2u32..10, num in 1u64..40, den in 1u64..40) {
        prop_assume!(num <= den);
        let at = |n: u64, d: u64, c: Sign| {
            lerch_phi(LerchPoint::new(c, q, Rational::new(n, d).unwrap()).unwrap()).unwrap()
        };
        let lo = at(num, 2 * den, Sign::Plus);
        let hi = at(num + den, 2 * den, Sign::Plus);
        let whole = at(num, den, c);
        let lhs = lo.value + c.f() * hi.value;
        let rhs = 2f64.powi(q as i32) * whole.value;
        let tol = 1e-13 * lhs.abs() + lo.err + hi.err + 2f64.powi(q as i32) * whole.err;
        prop_assert!((lhs - rhs).abs() <= tol, "{lhs} {rhs}");
    }

    #[test]
    fn plain_partial_sums_agree_with_acceleration(p in 1u32..4, q in 2u32..5, n in 1u32..3, b in sign()) {
        let f = Family::plain(FamilyTag::EulerH);
        let pr = Params::new(p, q, n, Sign::Minus, b);
        prop_assume!(validate_params(f, pr).ok);
        let fast = sum_estimate(f, pr, &SumConfig::default()).unwrap();
        let plain = SumConfig::new(20_000, Accel::None, 6).unwrap();
        let slow = sum_estimate(f, pr, &plain).unwrap();
        prop_assert!((fast.value - slow.value).abs() <= fast.err + slow.err, "{fast:?} {slow:?}");
    }
}
