//! Acceptance gate: one test per criterion, each driving a named
//! verification suite and printing a single pass/fail line.

use retracta::suites::{run_suite, SUITE_NAMES};

fn check(criterion: &str, suite: &str) {
    let lines = run_suite(suite).unwrap_or_else(|e| panic!("suite `{suite}` failed to run: {e}"));
    assert!(!lines.is_empty(), "suite `{suite}` produced no properties");
    let ok = lines.iter().all(|(_, pass)| *pass);
    println!("{}: {criterion}", if ok { "PASS" } else { "FAIL" });
    for (prop, pass) in &lines {
        assert!(*pass, "property failed in `{suite}`: {prop}");
    }
}

#[test]
fn criterion_01_presheaf_equivalence() {
    check("presheaf equivalence on the randomized corpus", "presheaf-roundtrip");
}

#[test]
fn criterion_02_grothendieck_identification() {
    check("simplex category ≅ Grothendieck construction", "grothendieck");
}

#[test]
fn criterion_03_representability() {
    check("Yoneda and abelian representability", "representability");
}

#[test]
fn criterion_04_homotopy_orbits() {
    check("homotopy-orbit homology", "homotopy-orbits");
}

#[test]
fn criterion_05_linearisation_adjunction() {
    check("linearisation adjunction and tensor isomorphism", "linearisation-adjunction");
}

#[test]
fn criterion_06_diagram_squares() {
    check("collapse and pullback squares commute", "dagger-squares");
}

#[test]
fn criterion_07_collapse_coinduction() {
    check("(C, T) adjunction and counit homology isomorphisms", "collapse-coinduction");
}

#[test]
fn criterion_08_pi1() {
    check("fundamental groups via the loop group", "pi1");
}

#[test]
fn criterion_09_loop_group() {
    check("loop-group well-formedness and twisting identities", "loop-group");
}

#[test]
fn criterion_10_finiteness() {
    check("finiteness certificates and functor closure", "finiteness");
}

#[test]
fn criterion_11_homological_core() {
    check("Smith normal form and Moore/normalized agreement", "homological-core");
}

#[test]
fn suite_names_cover_all_criteria() {
    assert_eq!(SUITE_NAMES.len(), 11);
    assert!(run_suite("no-such-suite").is_err());
}
