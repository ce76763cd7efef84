use mvlog::*;
use proptest::prelude::*;

fn cl30(c: [f64; 8]) -> Multivector {
    Multivector::new(Signature::Cl30, c)
}

fn example_a() -> Multivector {
    cl30([-1.0, -5.0, 7.0, -9.0, 7.0, -5.0, 9.0, 9.0])
}

fn principal() -> BranchParams {
    BranchParams::principal()
}

/// The alternative root pairs listed next to the example, up to sign.
const ROOTS_A_MINUS_1: [[f64; 8]; 2] = [
    [-2.3936546, -0.3144420, -1.3708134, 0.3806804, -1.7824116, -0.1086429, -1.6154750, -2.0134421],
    [-0.1660207, 2.4324037, 1.1337774, 2.0055931, 2.1654007, 1.9165921, 1.0892769, 1.9243691],
];
const ROOTS_A_PLUS_1: [[f64; 8]; 2] = [
    [-2.6330243, -0.1908183, -1.3218252, 0.4871255, -1.6829550, -0.0102534, -1.5705147, -1.9117486],
    [-0.2910283, 2.6047118, 1.0343473, 2.2416242, 2.0981982, 2.0727864, 0.9499284, 1.8337753],
];

/// The exact square root of `target` that matches a printed root. Besides `±√T` these are
/// `±√T·N̂`, where `N̂` is the vector-bivector part of `T` normalized to square to one.
fn exact_root(listed: [f64; 8], target: &Multivector) -> Multivector {
    let n = target.vector_bivector();
    let n_hat = n * sqrt(&(n * n)).unwrap().inverse().unwrap();
    let p = sqrt(target).unwrap();
    [p, -p, p * n_hat, -(p * n_hat)]
        .into_iter()
        .find(|r| r.relative_residual(&cl30(listed)) < 1e-6)
        .expect("printed root is not a square root of the target")
}

#[test]
fn listed_roots_square_correctly() {
    let a = example_a();
    for (roots, target) in [(ROOTS_A_MINUS_1, a - 1.0), (ROOTS_A_PLUS_1, a + 1.0)] {
        for r in roots {
            let r = cl30(r);
            assert!((r * r).relative_residual(&target) < 1e-6);
        }
    }
}

#[test]
fn principal_roots_are_listed() {
    let a = example_a();
    let r = sqrt(&(a - 1.0)).unwrap();
    assert!(r.relative_residual(&cl30(ROOTS_A_MINUS_1[0]).scale(-1.0)) < 1e-6);
    let r = sqrt(&(a + 1.0)).unwrap();
    assert!(r.relative_residual(&cl30(ROOTS_A_PLUS_1[0]).scale(-1.0)) < 1e-6);
}

#[test]
fn every_listed_root_gives_a_valid_arccosh() {
    let a = example_a();
    let mut values = Vec::new();
    for rm in ROOTS_A_MINUS_1 {
        for rp in ROOTS_A_PLUS_1 {
            for sign in [1.0, -1.0] {
                let (rm, rp) = (exact_root(rm, &(a - 1.0)).scale(sign), exact_root(rp, &(a + 1.0)));
                let v = arccosh_with_roots(&a, &rm, &rp, &principal()).unwrap();
                let back = forward_hyperbolic(&v, HyperbolicFn::Cosh).unwrap();
                assert!(back.relative_residual(&a) < 1e-9, "{back}");
                values.push(v);
            }
        }
    }
    let distinct = values.iter().enumerate().filter(|(i, v)| values[..*i].iter().all(|w| w.relative_residual(v) > 1e-6)).count();
    assert!(distinct >= 4, "{distinct}");
}

#[test]
fn arcsinh_with_alternate_roots() {
    let a = example_a();
    let principal_root = sqrt(&(a * a + 1.0)).unwrap();
    // Another square root of A² + 1 is built from the principal one by the free multivector.
    let b = BranchParams::principal().with_c1(1);
    let other = power(&(a * a + 1.0), &PowerSpec { exponent: Exponent::Rational { num: 1, den: 2 }, branch: b }).unwrap();
    assert!((other * other).relative_residual(&(a * a + 1.0)) < 1e-10);
    assert!(other.relative_residual(&principal_root) > 1e-3);
    for r in [principal_root, other, -principal_root, -other] {
        let Ok(v) = arcsinh_with_root(&a, &r, &principal()) else { continue };
        let back = forward_hyperbolic(&v, HyperbolicFn::Sinh).unwrap();
        assert!(back.relative_residual(&a) < 1e-8);
    }
}

#[test]
fn listed_arcsin_values_invert_sine() {
    let listed = [
        [2.5745928, 0.1233316, -2.3715122, 1.3713947, -2.8712504, 0.3732007, -2.8706092, -0.4882339],
        [2.6354984, 0.7081116, -0.4603462, 0.9970274, -0.3396621, 0.6477695, -0.6349751, -3.1995845],
        [0.5669998, -0.1233316, 2.3715122, -1.3713947, 2.8712504, -0.3732007, 2.8706092, 0.4882339],
        [0.5060943, -0.7081116, 0.4603462, -0.9970274, 0.3396621, -0.6477695, 0.6349751, 3.1995845],
    ];
    let a = example_a();
    for v in listed {
        let s = forward_trigonometric(&cl30(v), TrigFn::Sin).unwrap();
        assert!(s.relative_residual(&a) < 1e-5, "{s}");
    }
    let ours = inverse_trigonometric(&a, InverseTrigFn::Arcsin, &principal()).unwrap();
    assert!(ours.relative_residual(&cl30(listed[2])) < 1e-6);
    let acos = inverse_trigonometric(&a, InverseTrigFn::Arccos, &principal()).unwrap();
    let listed_acos = cl30([-1.0037965, -0.1233316, 2.3715122, -1.3713947, 2.8712504, -0.3732007, 2.8706092, 0.4882339]);
    assert!(acos.relative_residual(&listed_acos.scale(-1.0)) < 1e-6);
}

#[test]
fn arctan_and_arccot_are_complementary() {
    let a = example_a();
    let sum = inverse_trigonometric(&a, InverseTrigFn::Arctan, &principal()).unwrap()
        + inverse_trigonometric(&a, InverseTrigFn::Arccot, &principal()).unwrap();
    assert!(sum.relative_residual(&Multivector::scalar(Signature::Cl30, std::f64::consts::FRAC_PI_2)) < 1e-12);
}

#[test]
fn sqrt_examples_from_other_algebras() {
    let e1 = Multivector::blade(Signature::Cl03, Blade::E1, 1.0);
    let cbrt = power(&e1, &PowerSpec::principal(Exponent::Rational { num: 1, den: 3 })).unwrap();
    assert!(cbrt.relative_residual(&Multivector::new(Signature::Cl03, [0.75f64.sqrt(), 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])) < 1e-14);
    assert!((cbrt * cbrt * cbrt).relative_residual(&e1) < 1e-14);
}

#[test]
fn e1_in_cl21_has_no_root() {
    let a = Multivector::blade(Signature::Cl21, Blade::E1, 1.0);
    assert!(matches!(sqrt(&a), Err(MvError::NonExistent(_))));
}

fn small_cl30() -> impl Strategy<Value = Multivector> {
    prop::array::uniform8(-0.4f64..0.4).prop_map(cl30)
}

fn any_sig_mv(r: f64) -> impl Strategy<Value = Multivector> {
    (prop::sample::select(Signature::ALL.to_vec()), prop::array::uniform8(-r..r)).prop_map(|(s, c)| Multivector::new(s, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn square_of_sqrt(a in any_sig_mv(10.0)) {
        if let Ok(r) = sqrt(&a) {
            let sq = power(&r, &PowerSpec::principal(Exponent::Rational { num: 2, den: 1 })).unwrap();
            prop_assert!(sq.relative_residual(&a) < 1e-8, "{a}");
            prop_assert!((r * r).relative_residual(&a) < 1e-8);
        }
    }

    #[test]
    fn first_power_is_identity(a in any_sig_mv(10.0)) {
        if let Ok(p) = power(&a, &PowerSpec::principal(Exponent::Real(1.0))) {
            prop_assert!(p.relative_residual(&a) < 1e-8);
        }
    }

    #[test]
    fn hyperbolic_identities(a in any_sig_mv(2.0)) {
        let s = forward_hyperbolic(&a, HyperbolicFn::Sinh).unwrap();
        let c = forward_hyperbolic(&a, HyperbolicFn::Cosh).unwrap();
        let one = Multivector::one(a.sig());
        prop_assert!((c * c - s * s).relative_residual(&one) < 1e-8);
        if let Ok(t) = forward_hyperbolic(&a, HyperbolicFn::Tanh) {
            prop_assert!((t * c).relative_residual(&s) < 1e-8);
        }
    }

    #[test]
    fn trig_identities(a in prop::array::uniform8(-2.0f64..2.0), cl12 in any::<bool>()) {
        let sig = if cl12 { Signature::Cl12 } else { Signature::Cl30 };
        let a = Multivector::new(sig, a);
        let s = forward_trigonometric(&a, TrigFn::Sin).unwrap();
        let c = forward_trigonometric(&a, TrigFn::Cos).unwrap();
        prop_assert!((s * s + c * c).relative_residual(&Multivector::one(sig)) < 1e-8);
    }

    #[test]
    fn tanh_inverts_arctanh(a in small_cl30()) {
        let v = inverse_hyperbolic(&a, InverseHyperbolicFn::Arctanh, &BranchParams::principal()).unwrap();
        let back = forward_hyperbolic(&v, HyperbolicFn::Tanh).unwrap();
        prop_assert!(back.relative_residual(&a) < 1e-8);
    }

    #[test]
    fn tan_inverts_arctan(a in prop::array::uniform8(-5.0f64..5.0)) {
        let a = cl30(a);
        let Ok(v) = inverse_trigonometric(&a, InverseTrigFn::Arctan, &BranchParams::principal()) else { return Ok(()) };
        let Ok(back) = forward_trigonometric(&v, TrigFn::Tan) else { return Ok(()) };
        prop_assert!(back.relative_residual(&a) < 1e-7, "{a}");
    }

    #[test]
    fn inverse_functions_invert(a in prop::array::uniform8(-5.0f64..5.0)) {
        let a = cl30(a);
        let b = BranchParams::principal();
        let pairs = [
            (NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arcsinh), NamedFunction::Hyperbolic(HyperbolicFn::Sinh)),
            (NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arccosh), NamedFunction::Hyperbolic(HyperbolicFn::Cosh)),
            (NamedFunction::InverseHyperbolic(InverseHyperbolicFn::Arccoth), NamedFunction::Hyperbolic(HyperbolicFn::Coth)),
            (NamedFunction::InverseTrig(InverseTrigFn::Arcsin), NamedFunction::Trig(TrigFn::Sin)),
            (NamedFunction::InverseTrig(InverseTrigFn::Arccos), NamedFunction::Trig(TrigFn::Cos)),
            (NamedFunction::InverseTrig(InverseTrigFn::Arccot), NamedFunction::Trig(TrigFn::Cot)),
        ];
        for (inv, fwd) in pairs {
            let Ok(v) = inv.evaluate(&a, &b) else { continue };
            let Ok(back) = fwd.evaluate(&v, &b) else { continue };
            prop_assert!(back.relative_residual(&a) < 1e-7, "{inv}: {a}");
        }
    }
}
