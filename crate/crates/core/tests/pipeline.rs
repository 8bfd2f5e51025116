mod common;

use common::*;
use qpdeg::codegree::{
    classify, codegrees, find_ford_pair, verify_identities, Status, DEFAULT_MAX_SUBGROUPS,
};
use qpdeg::corpus::{corpus, Tier};

#[test]
fn fast_corpus_values_and_checks() {
    for e in corpus().into_iter().filter(|e| e.tier == Tier::Fast) {
        let a = analyse_text(&e.text);
        if let Some(c) = e.expected_c {
            assert_eq!(a.c(), c, "{}", e.name);
        }
        let cls = classify(&a, DEFAULT_MAX_SUBGROUPS).unwrap();
        let v = verify_identities(&a, &cls, DEFAULT_MAX_SUBGROUPS).unwrap();
        for c in &v.checks {
            assert_ne!(c.status, Status::Fail, "{}: {} {}", e.name, c.id, c.detail);
        }
    }
}

#[test]
fn codegree_gap_at_p5() {
    let a = analyse("codegree-gap-p5");
    assert_eq!(a.c(), 25);
    let cods = codegrees(&a.table).unwrap();
    for w in &a.solver.witnesses {
        assert_eq!(w.members.len(), 1);
        let chi = w.members[0];
        assert_eq!(cods[chi], 125);
        let pair = find_ford_pair(&a, chi, DEFAULT_MAX_SUBGROUPS).unwrap();
        assert_eq!(a.table.degree(chi) * cods[chi] / pair.a_value, 25);
    }
}

#[test]
fn phi3_witnesses_at_p5() {
    let a = analyse("phi3-2111e-p5");
    assert_eq!(a.c(), 50);
    let cods = codegrees(&a.table).unwrap();
    let mut linear_pair = false;
    let mut nonlinear_pair = false;
    for w in &a.solver.witnesses {
        assert_eq!(w.members.len(), 2);
        let mut shape: Vec<(u64, u64)> = w
            .members
            .iter()
            .map(|&i| (cods[i], a.table.degree(i)))
            .collect();
        shape.sort_unstable();
        assert_eq!(shape[0].0, 25);
        assert_eq!(shape[1].0, 125);
        assert!(shape[1].1 > 1);
        if shape[0].1 == 1 {
            linear_pair = true;
        } else {
            nonlinear_pair = true;
        }
    }
    assert!(linear_pair && nonlinear_pair);
}

#[test]
fn alpha_beta_group() {
    let a = analyse("alpha-beta-p5");
    assert_eq!(a.c(), 50);
    let cods = codegrees(&a.table).unwrap();
    for w in &a.solver.witnesses {
        assert!(w.members.iter().all(|&i| cods[i] == 125));
        let nl: u64 = w
            .members
            .iter()
            .filter(|&&i| a.table.degree(i) > 1)
            .map(|&i| cods[i])
            .sum();
        assert_eq!(5 * a.c(), nl);
    }
    assert!(hypothesis_one(&a).unwrap());
}

#[test]
fn witnesses_are_deterministic() {
    let x = analyse("phi3-2111e-p3");
    let y = analyse("phi3-2111e-p3");
    assert_eq!(x.solver.witnesses, y.solver.witnesses);
    assert_eq!(x.solver.witnesses.len(), 15);
}
