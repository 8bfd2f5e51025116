mod common;

use common::*;
use num_rational::BigRational;
use proptest::prelude::*;
use qpdeg::cyclo::{basis, CycInt, CycNum};

fn check_all(name: &str, a: &qpdeg::Analysis) {
    let run = |label: &str, r: Check| {
        if let Err(e) = r {
            panic!("{name}: {label}: {e}");
        }
    };
    run("orthogonality", orthogonality(a));
    run("kernels", kernels_intersect_trivially(a));
    run("routes", routes_agree(a));
    run("degree-codegree bound", degree_codegree_bound(a));
    if a.prime().is_some_and(|p| p != 2) && !a.group.is_abelian() {
        run("witness shape", witness_shape(a));
        run("linear codegrees", linear_codegrees(a));
        run("small order", small_order_theorem(a).map(|_| ()));
    }
    if let Some(b) = brute_force_c(a, 16) {
        assert_eq!(b as u64, a.c(), "{name}: brute force");
    }
}

#[test]
fn corpus_invariants() {
    for e in small_corpus(243) {
        let a = analyse_text(&e.text);
        check_all(&e.name, &a);
        if let Some(c) = e.expected_c {
            assert_eq!(a.c(), c, "{}", e.name);
        }
    }
}

#[test]
fn corpus_column_orthogonality() {
    for e in small_corpus(81) {
        column_orthogonality(&analyse_text(&e.text)).unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn induced_kernels_are_cores() {
    for e in small_corpus(81) {
        let n =
            induced_kernels(&analyse_text(&e.text)).unwrap_or_else(|m| panic!("{}: {m}", e.name));
        assert!(n > 0);
    }
}

#[test]
fn ford_pairs_agree_on_kernel() {
    for e in small_corpus(243) {
        ford_pairs_consistent(&analyse_text(&e.text)).unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn small_orders_lie_in_t() {
    let mut seen = 0;
    for e in small_corpus(625) {
        let a = analyse_text(&e.text);
        if small_order_theorem(&a).unwrap_or_else(|m| panic!("{}: {m}", e.name)) {
            seen += 1;
        }
    }
    assert!(seen >= 6);
}

fn cycle(start: usize, len: usize) -> String {
    let pts: Vec<String> = (start..start + len).map(|i| i.to_string()).collect();
    format!("({})", pts.join(" "))
}

/// Groups with known structure, rendered as input text.
fn group_text() -> impl Strategy<Value = String> {
    prop_oneof![
        // abelian 3-groups as products of cycles
        prop::collection::vec(prop::sample::select(vec![3usize, 9, 27]), 1..=3)
            .prop_filter("order ≤ 243", |v| v.iter().product::<usize>() <= 243)
            .prop_map(|v| {
                let n: usize = v.iter().sum();
                let mut s = format!("perm {n}");
                let mut at = 0;
                for l in v {
                    s.push('\n');
                    s.push_str(&cycle(at, l));
                    at += l;
                }
                s
            }),
        // split metacyclic groups
        (prop::sample::select(vec![3u64, 5]), 2u32..=3, 1u32..=2)
            .prop_filter("order", |&(p, m, k)| p.pow(m + k) <= 625)
            .prop_map(|(p, m, k)| format!(
                "p={p}; gens b,a; b^{}=1; a^{}=1; [a,b]=a^{}",
                p.pow(k),
                p.pow(m),
                p.pow(m - 1)
            )),
        // Heisenberg group times a cyclic group
        (prop::sample::select(vec![3u64, 5]), 0u32..=2)
            .prop_filter("order", |&(p, j)| p.pow(3 + j) <= 625)
            .prop_map(|(p, j)| match j {
                0 => format!("p={p}; gens a,b,c; [b,a]=c"),
                _ => format!("p={p}; gens a,b,c,d; d^{}=1; [b,a]=c", p.pow(j)),
            }),
        // the order p^4 presentation with c(G) = p^2
        prop::sample::select(vec![3u64, 5])
            .prop_map(|p| format!("p={p}; gens z,y,x; x^{}=1; [x,z]=y; [x,y]=x^{p}", p * p)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn random_groups_satisfy_invariants(text in group_text()) {
        let a = analyse_text(&text);
        check_all(&text, &a);
    }

    #[test]
    fn cyclic_p_groups(p in prop::sample::select(vec![3usize, 5, 7]), k in 1u32..=3) {
        let n = p.pow(k);
        prop_assume!(n <= 343);
        let a = analyse_text(&format!("perm {n}\n{}", cycle(0, n)));
        prop_assert_eq!(a.c(), n as u64);
        prop_assert_eq!(a.solver.witnesses.len(), 1);
    }

    #[test]
    fn cyclotomic_ring_laws(
        n in prop::sample::select(vec![3u32, 5, 9, 15, 27]),
        xs in prop::collection::vec((0i64..27, -4i64..5), 1..5),
        ys in prop::collection::vec((0i64..27, -4i64..5), 1..5),
        zs in prop::collection::vec((0i64..27, -4i64..5), 1..5),
        u in 1i64..27,
    ) {
        let make = |v: &[(i64, i64)]| {
            v.iter().fold(CycNum::zero(n), |acc, &(j, c)| {
                &acc + &(&CycNum::root_of_unity(n, j) * &CycNum::from_integer(c))
            })
        };
        let (x, y, z) = (make(&xs), make(&ys), make(&zs));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(x.conj().conj(), x.clone());
        if qpdeg::cyclo::gcd(u as u64, n as u64) == 1 {
            let s = |w: &CycNum| w.galois_apply(u).unwrap();
            prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
            prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        }
        // the norm to Q is rational
        let mut norm = CycNum::one();
        for k in 1..n as i64 {
            if qpdeg::cyclo::gcd(k as u64, n as u64) == 1 {
                norm = &norm * &x.galois_apply(k).unwrap();
            }
        }
        prop_assert!(norm.rational_value().is_some());
    }

    #[test]
    fn cycint_matches_cycnum(
        n in prop::sample::select(vec![3u32, 9, 25, 27]),
        xs in prop::collection::vec((0u64..27, -3i64..4), 1..6),
        ys in prop::collection::vec((0u64..27, -3i64..4), 1..6),
    ) {
        let b = basis(n);
        let x = CycInt::from_roots(&b, xs.iter().map(|&(j, c)| (j % n as u64, c)));
        let y = CycInt::from_roots(&b, ys.iter().map(|&(j, c)| (j % n as u64, c)));
        let xn = x.to_cycnum(n);
        let yn = y.to_cycnum(n);
        prop_assert_eq!(x.mul(&y, &b).to_cycnum(n), &xn * &yn);
        prop_assert_eq!(x.add(&y).to_cycnum(n), &xn + &yn);
        prop_assert_eq!(CycInt::from_cycnum(&xn), Some(x.clone()));
        let half = BigRational::new(1.into(), 2.into());
        let h = &xn * &CycNum::from_rational(half);
        prop_assert_eq!(CycInt::from_cycnum(&h).is_some(), x.scale(1).exact_div(2).is_some());
    }
}
