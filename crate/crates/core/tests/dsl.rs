//! DSL round trips on random syntax trees, compositional evaluation, and
//! agreement between textual identities and the native checkers.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use relhopf_core::catalog::{build_group_algebra, build_sweedler, z_n_table};
use relhopf_core::field::{PrimeField, Rationals};
use relhopf_core::hopfcore::check_bialgebra;
use relhopf_core::morphdsl::{
    check_identity, elaborate, evaluate, parse, print, roles, Environment, MorphismExpr,
};
use relhopf_core::transmute::enveloping_braided_group;

fn random_expr(rng: &mut ChaCha8Rng, depth: usize) -> MorphismExpr {
    let names = ["m", "Delta", "eps", "eta", "S", "act", "coact"];
    let objects = ["B", "A", "X", "I"];
    if depth == 0 || rng.gen_bool(0.4) {
        match rng.gen_range(0..3) {
            0 => MorphismExpr::Gen(names[rng.gen_range(0..names.len())].to_string()),
            1 => MorphismExpr::Id(objects[rng.gen_range(0..objects.len())].to_string()),
            _ => MorphismExpr::Flip(
                objects[rng.gen_range(0..objects.len())].to_string(),
                objects[rng.gen_range(0..objects.len())].to_string(),
            ),
        }
    } else {
        let l = Box::new(random_expr(rng, depth - 1));
        let r = Box::new(random_expr(rng, depth - 1));
        if rng.gen_bool(0.5) {
            MorphismExpr::Compose(l, r)
        } else {
            MorphismExpr::Tensor(l, r)
        }
    }
}

#[test]
fn print_parse_round_trips_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240811);
    for i in 0..100 {
        let e = random_expr(&mut rng, 5);
        let text = print(&e);
        let back = parse(&text).unwrap_or_else(|err| panic!("case {i}: `{text}`: {err}"));
        assert_eq!(back, e, "case {i}: `{text}`");
    }
}

#[test]
fn evaluation_is_compositional() {
    let h = build_group_algebra(Rationals, &z_n_table(2)).unwrap();
    let mut env = Environment::new(Rationals);
    roles::add_bialgebra(&mut env, "B", "B", h.bialgebra()).unwrap();

    let a_text = "mB . (id(B) x mB)";
    let b_text = "DeltaB x id(B)";
    let a = elaborate(&parse(a_text).unwrap(), &env).unwrap();
    let b = elaborate(&parse(b_text).unwrap(), &env).unwrap();
    let combined = elaborate(&parse(&format!("({a_text}) . ({b_text})")).unwrap(), &env).unwrap();
    let lhs = evaluate(&combined, &env);
    let rhs = evaluate(&a, &env).compose(&evaluate(&b, &env)).unwrap();
    assert_eq!(
        lhs,
        rhs.reshaped(lhs.codomain_dims().to_vec(), lhs.domain_dims().to_vec())
            .unwrap()
    );

    let combined = elaborate(&parse(&format!("({a_text}) x ({b_text})")).unwrap(), &env).unwrap();
    let lhs = evaluate(&combined, &env);
    let rhs = evaluate(&a, &env).tensor(&evaluate(&b, &env)).unwrap();
    assert!(lhs.same_matrix(&rhs));
}

#[test]
fn dsl_verdicts_match_native_bialgebra_checker() {
    // one passing and one failing structure; per-identity verdicts must match
    let f5 = PrimeField::new(5).unwrap();
    let (good, _) = build_sweedler(f5, 0).unwrap();
    let bad = relhopf_core::mutate::mutate_hopf(
        &good,
        relhopf_core::mutate::HopfSite {
            component: relhopf_core::mutate::HopfComponent::Comult,
            row: 5,
            col: 1,
        },
        1,
    );
    for h in [&good, &bad] {
        let native = check_bialgebra(h.bialgebra());
        let mut env = Environment::new(f5);
        roles::add_bialgebra(&mut env, "B", "B", h.bialgebra()).unwrap();
        for (name, lhs, rhs) in [
            ("algebra_assoc", "mB . (mB x id(B))", "mB . (id(B) x mB)"),
            ("algebra_unit_left", "mB . (etaB x id(B))", "id(B)"),
            ("algebra_unit_right", "mB . (id(B) x etaB)", "id(B)"),
            (
                "coalgebra_coassoc",
                "(DeltaB x id(B)) . DeltaB",
                "(id(B) x DeltaB) . DeltaB",
            ),
            ("coalgebra_counit_left", "(epsB x id(B)) . DeltaB", "id(B)"),
            ("coalgebra_counit_right", "(id(B) x epsB) . DeltaB", "id(B)"),
            (
                "bialgebra_delta_mult",
                "DeltaB . mB",
                "(mB x mB) . (id(B) x flip(B,B) x id(B)) . (DeltaB x DeltaB)",
            ),
            ("bialgebra_eps_mult", "epsB . mB", "epsB x epsB"),
            ("bialgebra_delta_unit", "DeltaB . etaB", "etaB x etaB"),
            ("bialgebra_eps_unit", "epsB . etaB", "id(I)"),
        ] {
            let item = check_identity(name, lhs, rhs, &env).unwrap();
            let native_item = native.item(name).unwrap();
            assert_eq!(item.pass, native_item.pass, "{name}");
        }
    }
}

#[test]
fn dsl_expresses_the_braided_delta_mult_identity() {
    let f5 = PrimeField::new(5).unwrap();
    let (h, r) = build_sweedler(f5, 1).unwrap();
    let out = enveloping_braided_group(&h, &r).unwrap();
    let datum = relhopf_core::monoidal::MonoidalInputDatum::from_braided(
        h.bialgebra().clone(),
        &out.braided,
    )
    .unwrap();
    let mut env = Environment::new(f5);
    roles::add_bialgebra(&mut env, "B", "B", h.bialgebra()).unwrap();
    roles::add_datum(&mut env, &datum).unwrap();
    let item = check_identity(
        "braided_delta_mult",
        "DeltaA . mA",
        "(mA x mA) . (id(A) x act x id(A) x id(A)) . (id(A) x id(B) x flip(A,A) x id(A)) . (id(A) x coact x id(A) x id(A)) . (DeltaA x DeltaA)",
        &env,
    )
    .unwrap();
    assert!(item.pass);
    // the identity distinguishes: with the untransmuted Δ it must fail
    let mut env = Environment::new(f5);
    roles::add_bialgebra(&mut env, "B", "B", h.bialgebra()).unwrap();
    env.add_object("A", 4).unwrap();
    env.add_generator("mA", &["A", "A"], &["A"], h.mult().clone())
        .unwrap();
    env.add_generator("DeltaA", &["A"], &["A", "A"], h.comult().clone())
        .unwrap();
    env.add_generator("coact", &["A"], &["B", "A"], out.braided.coaction().clone())
        .unwrap();
    env.add_generator("act", &["B", "A"], &["A"], out.braided.action().clone())
        .unwrap();
    let item = check_identity(
        "braided_delta_mult",
        "DeltaA . mA",
        "(mA x mA) . (id(A) x act x id(A) x id(A)) . (id(A) x id(B) x flip(A,A) x id(A)) . (id(A) x coact x id(A) x id(A)) . (DeltaA x DeltaA)",
        &env,
    )
    .unwrap();
    assert!(!item.pass);
    assert!(item.witness.is_some());
}

#[test]
fn identity_file_fails_with_witness_on_mutated_structure() {
    let h = build_group_algebra(Rationals, &z_n_table(2)).unwrap();
    let broken = relhopf_core::mutate::mutate_hopf(
        &h,
        relhopf_core::mutate::HopfSite {
            component: relhopf_core::mutate::HopfComponent::Mult,
            row: 0,
            col: 3,
        },
        1,
    );
    let mut env = Environment::new(Rationals);
    roles::add_bialgebra(&mut env, "B", "B", broken.bialgebra()).unwrap();
    let text = "\
algebra_assoc: mB . (mB x id(B)) == mB . (id(B) x mB)
bialgebra_eps_mult: epsB . mB == epsB x epsB
bialgebra_delta_mult: DeltaB . mB == (mB x mB) . (id(B) x flip(B,B) x id(B)) . (DeltaB x DeltaB)
";
    let run = relhopf_core::morphdsl::run_identity_file(text, &env).unwrap();
    assert!(!run.report.passed());
    let failing: Vec<_> = run.report.failures().collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|i| i.witness.is_some()));
    // cross-check the witness against the native comparison
    let native = check_bialgebra(broken.bialgebra());
    for item in &failing {
        let native_item = native.item(&item.name).unwrap();
        assert!(!native_item.pass);
        assert_eq!(item.witness, native_item.witness);
    }
}
