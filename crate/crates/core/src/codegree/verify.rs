//! Hypothesis-guarded checks of the identities relating `c(G)` to codegrees.
//!
//! Every check first tests its hypotheses on the computed data. A check whose
//! hypotheses fail is reported as not applicable, never dropped.

use serde::Serialize;

use super::{class_t_membership, codegrees, ClassifierReport, FordCache, TMembership};
use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::quasiperm::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// Informational finding that is not a failure.
    Notice,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub class_t: Option<TMembership>,
    /// Witness members whose Ford pair has `ker λ = ker χ`.
    pub a_chi_equals_one: Vec<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).map(|c| c.status)
    }
}

struct Ctx<'a> {
    a: &'a Analysis,
    cls: &'a ClassifierReport,
    cods: Vec<u64>,
    p: u64,
    odd: bool,
    nonabelian_p: bool,
    c: u64,
    out: Vec<Check>,
}

impl Ctx<'_> {
    fn push(&mut self, id: &'static str, statement: &'static str, status: Status, detail: String) {
        self.out.push(Check {
            id,
            statement,
            status,
            detail,
        });
    }

    fn verdict(&mut self, id: &'static str, statement: &'static str, ok: bool, detail: String) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, statement, status, detail);
    }

    fn na(&mut self, id: &'static str, statement: &'static str, why: &str) {
        self.push(id, statement, Status::NotApplicable, why.to_string());
    }

    fn witnesses(&self) -> &[Witness] {
        &self.a.solver.witnesses
    }

    fn sum_cod(&self, w: &Witness) -> u64 {
        w.members.iter().map(|&x| self.cods[x]).sum()
    }

    fn sum_deg_cod(&self, w: &Witness) -> u64 {
        w.members
            .iter()
            .map(|&x| self.a.table.degree(x) * self.cods[x])
            .sum()
    }

    fn sums(&self, f: impl Fn(&Self, &Witness) -> u64) -> Vec<u64> {
        self.witnesses().iter().map(|w| f(self, w)).collect()
    }

    fn degree_profile(&self, w: &Witness) -> Vec<u64> {
        let mut d: Vec<u64> = w.members.iter().map(|&x| self.a.table.degree(x)).collect();
        d.sort_unstable();
        d
    }
}

fn undetermined(e: &Error) -> String {
    format!("undetermined: {e}")
}

/// Runs every check. Errors from the Ford search or the subgroup budget turn
/// the affected checks into "not applicable" with the reason recorded.
pub fn verify_identities(
    a: &Analysis,
    cls: &ClassifierReport,
    max_subgroups: usize,
) -> Result<VerificationReport> {
    let p = a.prime().unwrap_or(0);
    let mut cx = Ctx {
        a,
        cls,
        cods: codegrees(&a.table)?,
        p,
        odd: p > 2,
        nonabelian_p: p > 0 && !cls.is_abelian,
        c: a.c(),
        out: Vec::new(),
    };
    let mut ford = FordCache::new(max_subgroups);
    let class_t: std::result::Result<TMembership, String> = if cx.odd {
        match class_t_membership(a, &mut ford) {
            Ok(t) => Ok(t),
            Err(e @ (Error::Budget { .. } | Error::NoFordPair(_))) => Err(undetermined(&e)),
            Err(e) => return Err(e),
        }
    } else {
        Err("not an odd p-group".to_string())
    };
    let in_t = class_t.as_ref().ok().map(|t| t.member);

    witness_shape(&mut cx);
    central_deficiency(&mut cx);
    route_agreement(&mut cx);
    linear_codegrees(&mut cx);
    codegree_upper_bound(&mut cx);
    let a_one = ford_identity(&mut cx, &mut ford);
    class_t_bound(&mut cx, &mut ford, in_t);
    small_orders(&mut cx, in_t);
    cyclic_center(&mut cx, in_t);
    two_degrees(&mut cx, in_t);
    core_p(&mut cx, in_t);
    kernel_chain(&mut cx, in_t);
    normally_monomial(&mut cx);
    maximal_class(&mut cx);
    gvz(&mut cx, &mut ford, in_t);
    cm(&mut cx);
    match &a_one {
        Ok(v) if v.is_empty() => cx.verdict(
            "a-chi-one",
            "no nonlinear witness member has a_χ = 1",
            true,
            "none found".into(),
        ),
        Ok(v) => cx.push(
            "a-chi-one",
            "no nonlinear witness member has a_χ = 1",
            Status::Notice,
            format!("a_χ = 1 for characters {v:?}"),
        ),
        Err(why) => cx.na("a-chi-one", "no nonlinear witness member has a_χ = 1", why),
    }
    Ok(VerificationReport {
        checks: cx.out,
        class_t: class_t.ok(),
        a_chi_equals_one: a_one.unwrap_or_default(),
    })
}

fn witness_shape(cx: &mut Ctx) {
    const S: &str = "every optimal witness has |X| = d(Z(G)) and m(ξ) = ξ(1)/(p−1)";
    if !cx.nonabelian_p {
        return cx.na("witness-shape", S, "needs a non-abelian p-group");
    }
    let dz = cx.cls.center_rank as usize;
    let p = cx.p;
    let bad: Vec<String> = cx
        .witnesses()
        .iter()
        .filter(|w| w.members.len() != dz || w.m_value * (p - 1) != w.xi_degree)
        .map(|w| {
            format!(
                "{:?}: |X| = {}, ξ(1) = {}, m = {}",
                w.members,
                w.members.len(),
                w.xi_degree,
                w.m_value
            )
        })
        .collect();
    let detail = if bad.is_empty() {
        format!("{} witnesses, d(Z) = {dz}", cx.witnesses().len())
    } else {
        bad.join("; ")
    };
    cx.verdict("witness-shape", S, bad.is_empty(), detail);
}

/// Some central `z` of order `p` has orbit-sum value `−d(χ)/(p−1)`.
fn central_deficiency(cx: &mut Ctx) {
    const S: &str = "each witness member has a central z of order p with Σσ χ^σ(z) = −d(χ)/(p−1)";
    if !cx.nonabelian_p {
        return cx.na("central-deficiency", S, "needs a non-abelian p-group");
    }
    let p = cx.p;
    let cd = &cx.a.classes;
    let central_p: Vec<usize> = (0..cd.len())
        .filter(|&l| cd.classes[l].size == 1 && cd.classes[l].elem_order as u64 == p)
        .collect();
    let mut bad = Vec::new();
    let mut seen = 0;
    for w in cx.witnesses() {
        for &x in &w.members {
            let o = cx.a.galois.orbit(x);
            seen += 1;
            let d = o.d_value as i64;
            let found = central_p
                .iter()
                .any(|&l| o.orbit_sum[l] * (p as i64 - 1) == -d);
            if !found || o.m_value * (p - 1) < o.d_value {
                bad.push(x);
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{seen} members checked")
    } else {
        format!("fails for {bad:?}")
    };
    cx.verdict("central-deficiency", S, bad.is_empty(), detail);
}

fn route_agreement(cx: &mut Ctx) {
    const S: &str = "the p/(p−1)·Σd route and direct minimisation agree";
    match cx.a.solver.fast {
        None => cx.na(
            "route-agreement",
            S,
            "fast route needs a non-abelian odd p-group",
        ),
        Some(f) => {
            let g = cx.a.solver.general;
            cx.verdict(
                "route-agreement",
                S,
                f == g,
                format!("fast {f}, general {g}"),
            );
        }
    }
}

fn linear_codegrees(cx: &mut Ctx) {
    const S: &str = "cod(η) = p/(p−1)·d(η) for every nontrivial linear η";
    if cx.p == 0 {
        return cx.na("linear-codegree", S, "needs a p-group");
    }
    let p = cx.p;
    let t = &cx.a.table;
    let bad: Vec<usize> = (1..t.len())
        .filter(|&i| t.degree(i) == 1)
        .filter(|&i| cx.cods[i] * (p - 1) != p * cx.a.galois.d_value(i))
        .collect();
    let n = (1..t.len()).filter(|&i| t.degree(i) == 1).count();
    let detail = if bad.is_empty() {
        format!("{n} linear characters")
    } else {
        format!("fails for {bad:?}")
    };
    cx.verdict("linear-codegree", S, bad.is_empty(), detail);
}

fn codegree_upper_bound(cx: &mut Ctx) {
    const S: &str = "c(G) ≤ Σ χ(1)·cod(χ) over every optimal witness";
    if !(cx.odd && cx.nonabelian_p) {
        return cx.na("codegree-upper-bound", S, "needs a non-abelian odd p-group");
    }
    let sums = cx.sums(|cx, w| cx.sum_deg_cod(w));
    let ok = sums.iter().all(|&s| cx.c <= s);
    let c = cx.c;
    cx.verdict(
        "codegree-upper-bound",
        S,
        ok,
        format!("c = {c}, sums {sums:?}"),
    );
}

/// Returns the witness members with `a_χ = 1`.
fn ford_identity(cx: &mut Ctx, ford: &mut FordCache) -> std::result::Result<Vec<usize>, String> {
    const S: &str =
        "c(G) = Σ_lin cod(χ) + Σ_nl (χ(1)/a_χ)·cod(χ) with a_χ | cod(χ), for every optimal witness";
    if !(cx.odd && cx.nonabelian_p) {
        cx.na("ford-identity", S, "needs a non-abelian odd p-group");
        return Err("needs a non-abelian odd p-group".into());
    }
    let mut sums = Vec::new();
    let mut ok = true;
    let mut a_one = Vec::new();
    let mut notes = Vec::new();
    for w in cx.a.solver.witnesses.clone() {
        let mut s = 0u64;
        for &x in &w.members {
            let deg = cx.a.table.degree(x);
            let cod = cx.cods[x];
            if deg == 1 {
                s += cod;
                continue;
            }
            let a_val = match ford.get(cx.a, x) {
                Ok(pair) => pair.a_value,
                Err(e) => {
                    let why = undetermined(&e);
                    if matches!(e, Error::NoFordPair(_)) {
                        cx.verdict("ford-identity", S, false, why.clone());
                    } else {
                        cx.na("ford-identity", S, &why);
                    }
                    return Err(why);
                }
            };
            if a_val == 1 {
                a_one.push(x);
            }
            if !cod.is_multiple_of(a_val) {
                ok = false;
                notes.push(format!("a_χ = {a_val} does not divide cod = {cod} for {x}"));
            }
            s += deg * cod / a_val;
            notes.push(format!("χ{x}: χ(1) = {deg}, cod = {cod}, a_χ = {a_val}"));
        }
        ok &= s == cx.c;
        sums.push(s);
    }
    notes.dedup();
    let c = cx.c;
    cx.verdict(
        "ford-identity",
        S,
        ok,
        format!("c = {c}, sums {sums:?}; {}", notes.join(", ")),
    );
    a_one.sort_unstable();
    a_one.dedup();
    Ok(a_one)
}

fn class_t_bound(cx: &mut Ctx, ford: &mut FordCache, in_t: Option<bool>) {
    const S: &str = "if G ∈ 𝒯 then c(G) ≤ Σ_lin cod(η) + Σ_nl χ(1)·cod(χ)/p";
    match in_t {
        Some(true) => {}
        Some(false) => return cx.na("class-t-bound", S, "G is not in 𝒯"),
        None => return cx.na("class-t-bound", S, "membership in 𝒯 undetermined"),
    }
    let p = cx.p as u128;
    let mut ok = true;
    let mut bounds = Vec::new();
    for w in cx.a.solver.witnesses.clone() {
        // compare p·c against p·Σ_lin cod + Σ_nl χ(1)·cod
        let mut rhs: u128 = 0;
        for &x in &w.members {
            let deg = cx.a.table.degree(x) as u128;
            let cod = cx.cods[x] as u128;
            if deg == 1 {
                rhs += p * cod;
            } else {
                rhs += deg * cod;
                if let Ok(pair) = ford.get(cx.a, x) {
                    ok &= pair.a_value as u128 >= p;
                }
            }
        }
        ok &= p * cx.c as u128 <= rhs;
        bounds.push(format!("{}/{}", rhs, p));
    }
    let c = cx.c;
    cx.verdict(
        "class-t-bound",
        S,
        ok,
        format!("c = {c}, bounds {bounds:?}"),
    );
}

fn small_orders(cx: &mut Ctx, in_t: Option<bool>) {
    const S: &str =
        "order p³ or p⁴ (p odd): G ∈ 𝒯; c = Σcod at p³; c ≤ Σcod at p⁴ with equality when |Z| = p²";
    let n = cx.cls.log_order.unwrap_or(0);
    if !(cx.odd && cx.nonabelian_p && (n == 3 || n == 4)) {
        return cx.na(
            "small-order",
            S,
            "needs a non-abelian odd p-group of order p³ or p⁴",
        );
    }
    let sums = cx.sums(|cx, w| cx.sum_cod(w));
    let c = cx.c;
    let p2 = (cx.p * cx.p) as usize;
    let rel_ok = if n == 3 || cx.cls.center_order == p2 {
        sums.iter().all(|&s| s == c)
    } else {
        sums.iter().all(|&s| c <= s)
    };
    let ok = in_t == Some(true) && rel_ok;
    cx.verdict(
        "small-order",
        S,
        ok,
        format!(
            "in 𝒯: {in_t:?}, c = {c}, Σcod {sums:?}, |Z| = {}",
            cx.cls.center_order
        ),
    );
}

fn cyclic_center(cx: &mut Ctx, in_t: Option<bool>) {
    const S: &str = "a non-abelian odd p-group with cyclic center lies in 𝒯";
    if !(cx.odd && cx.nonabelian_p && cx.cls.center_cyclic) {
        return cx.na(
            "cyclic-center-in-t",
            S,
            "needs a non-abelian odd p-group with cyclic center",
        );
    }
    cx.verdict(
        "cyclic-center-in-t",
        S,
        in_t == Some(true),
        format!("in 𝒯: {in_t:?}"),
    );
}

fn two_degrees(cx: &mut Ctx, in_t: Option<bool>) {
    const S: &str = "cd(G) = {1, p^b} and c(G) = d(Z(G))·p^(b+1) imply G ∈ 𝒯";
    if !(cx.odd && cx.nonabelian_p) {
        return cx.na("two-degree-t", S, "needs a non-abelian odd p-group");
    }
    let cd = &cx.cls.degree_set;
    let hyp = cd.len() == 2 && {
        let pb = cd[1];
        cx.c == cx.cls.center_rank as u64 * pb * cx.p
    };
    if !hyp {
        return cx.na(
            "two-degree-t",
            S,
            &format!("cd = {cd:?}, c = {}, d(Z) = {}", cx.c, cx.cls.center_rank),
        );
    }
    cx.verdict(
        "two-degree-t",
        S,
        in_t == Some(true),
        format!("cd = {cd:?}, c = {}, in 𝒯: {in_t:?}", cx.c),
    );
}

fn core_p(cx: &mut Ctx, in_t: Option<bool>) {
    const S: &str = "core-p (p odd): cd = {1,p}; d(Z) = 2 and n > 2e+3 give G ∈ 𝒯; in 𝒯 gives c = Σcod, and c = p^(n−1) when Z is cyclic";
    if !(cx.odd && cx.nonabelian_p) {
        return cx.na("core-p", S, "needs a non-abelian odd p-group");
    }
    match cx.cls.is_core_p {
        None => return cx.na("core-p", S, "core-p flag undetermined (subgroup budget)"),
        Some(false) => return cx.na("core-p", S, "G is not core-p"),
        Some(true) => {}
    }
    let p = cx.p;
    let n = cx.cls.log_order.unwrap();
    let e = crate::group::log_p(cx.cls.exponent, p).unwrap();
    let mut ok = cx.cls.degree_set == vec![1, p];
    let mut notes = vec![format!("cd = {:?}", cx.cls.degree_set)];
    if cx.cls.center_rank == 2 && n > 2 * e + 3 {
        ok &= in_t == Some(true);
        notes.push(format!("d(Z) = 2, n = {n} > 2e+3, in 𝒯: {in_t:?}"));
    }
    if in_t == Some(true) {
        let sums = cx.sums(|cx, w| cx.sum_cod(w));
        ok &= sums.iter().all(|&s| s == cx.c);
        notes.push(format!("c = {}, Σcod {sums:?}", cx.c));
        if cx.cls.center_cyclic {
            ok &= cx.c == p.pow(n - 1);
            notes.push(format!("p^(n−1) = {}", p.pow(n - 1)));
        }
    }
    cx.verdict("core-p", S, ok, notes.join("; "));
}

fn kernel_chain(cx: &mut Ctx, in_t: Option<bool>) {
    const S: &str = "nonlinear kernels form a chain iff G has maximal class or G' is the unique minimal normal subgroup";
    if !cx.nonabelian_p {
        cx.na("kernel-chain", S, "needs a non-abelian p-group");
    } else {
        let lhs = cx.cls.kernels_chain;
        let rhs = cx.cls.is_maximal_class || cx.cls.derived_unique_minimal_normal;
        cx.verdict(
            "kernel-chain",
            S,
            lhs == rhs,
            format!(
                "chain: {lhs}, maximal class: {}, G' unique minimal normal: {}",
                cx.cls.is_maximal_class, cx.cls.derived_unique_minimal_normal
            ),
        );
    }
    const S2: &str = "a kernel chain puts G in 𝒯";
    if !(cx.odd && cx.nonabelian_p && cx.cls.kernels_chain) {
        cx.na(
            "kernel-chain-in-t",
            S2,
            "needs a non-abelian odd p-group with a kernel chain",
        );
    } else {
        cx.verdict(
            "kernel-chain-in-t",
            S2,
            in_t == Some(true),
            format!("in 𝒯: {in_t:?}"),
        );
    }
    const S3: &str = "G' the unique minimal normal subgroup gives c(G) = |G/Z(G)|^(1/2)·|Z(G)|";
    if !(cx.nonabelian_p && cx.cls.derived_unique_minimal_normal) {
        cx.na(
            "unique-minimal-derived",
            S3,
            "G' is not the unique minimal normal subgroup",
        );
    } else {
        let target = sqrt_times_center(cx);
        cx.verdict(
            "unique-minimal-derived",
            S3,
            target == Some(cx.c),
            format!("c = {}, formula {target:?}", cx.c),
        );
    }
}

fn sqrt_times_center(cx: &Ctx) -> Option<u64> {
    let q = (cx.cls.order / cx.cls.center_order) as u64;
    let r = (q as f64).sqrt().round() as u64;
    (r * r == q).then(|| r * cx.cls.center_order as u64)
}

fn normally_monomial(cx: &mut Ctx) {
    const S: &str = "normally monomial with cyclic center: b·|Z| divides c and c divides b·exp(A) for every abelian normal A of maximal order";
    const S2: &str = "normally monomial, cyclic center, no cyclic normal subgroup of index b (p odd): c ≤ (b/p)·cod(χ) for X = {χ}";
    if !(cx.nonabelian_p && cx.cls.center_cyclic) {
        cx.na(
            "normally-monomial-divisibility",
            S,
            "needs a non-abelian p-group with cyclic center",
        );
        cx.na(
            "normally-monomial-bound",
            S2,
            "needs a non-abelian p-group with cyclic center",
        );
        return;
    }
    match cx.cls.is_normally_monomial {
        None => {
            cx.na(
                "normally-monomial-divisibility",
                S,
                "normal monomiality undetermined (subgroup budget)",
            );
            cx.na(
                "normally-monomial-bound",
                S2,
                "normal monomiality undetermined (subgroup budget)",
            );
            return;
        }
        Some(false) => {
            cx.na(
                "normally-monomial-divisibility",
                S,
                "G is not normally monomial",
            );
            cx.na("normally-monomial-bound", S2, "G is not normally monomial");
            return;
        }
        Some(true) => {}
    }
    let b = cx.cls.b;
    let c = cx.c;
    match &cx.cls.max_abelian_normal {
        None => cx.na(
            "normally-monomial-divisibility",
            S,
            "abelian normal subgroups undetermined (subgroup budget)",
        ),
        Some(an) => {
            let lo = b * cx.cls.center_order as u64;
            let ok =
                c.is_multiple_of(lo) && an.exponents.iter().all(|&e| (b * e).is_multiple_of(c));
            cx.verdict(
                "normally-monomial-divisibility",
                S,
                ok,
                format!(
                    "b·|Z| = {lo}, c = {c}, b·exp(A) over {:?}",
                    an.exponents.iter().map(|e| b * e).collect::<Vec<_>>()
                ),
            );
        }
    }
    match cx.cls.cyclic_normal_index_b {
        _ if !cx.odd => cx.na("normally-monomial-bound", S2, "needs odd p"),
        None => cx.na(
            "normally-monomial-bound",
            S2,
            "normal subgroups undetermined (subgroup budget)",
        ),
        Some(true) => cx.na(
            "normally-monomial-bound",
            S2,
            "a cyclic normal subgroup of index b exists",
        ),
        Some(false) => {
            let p = cx.p;
            let vals: Vec<u64> = cx.sums(|cx, w| w.members.iter().map(|&x| cx.cods[x]).sum());
            let ok = cx.witnesses().iter().all(|w| w.members.len() == 1)
                && vals.iter().all(|&cod| c * p <= b * cod);
            cx.verdict(
                "normally-monomial-bound",
                S2,
                ok,
                format!("c = {c}, b = {b}, cod {vals:?}"),
            );
        }
    }
}

fn maximal_class(cx: &mut Ctx) {
    const S: &str = "normally monomial maximal class (p odd, n > 3), X = {χ}: c ≤ (b/p)·cod(χ) and b·p ≤ c ≤ b·exp(A) for an abelian normal A of index b";
    const S2: &str = "as above with b = p and n ≤ p+1: c ∈ {p², p³}";
    const S3: &str = "as above with b > p: b·p ≤ c ≤ b·exp(G'), and c = b·p when n ≤ p+1";
    const S4: &str =
        "maximal class (p odd), n ≤ p+1, cd = {1, p, p^b} with b > 1: c ∈ {p^(b+1), p^(b+2)}";
    let n = cx.cls.log_order.unwrap_or(0);
    let p = cx.p;
    let c = cx.c;
    let b = cx.cls.b;
    let base = cx.odd && cx.nonabelian_p && cx.cls.is_maximal_class;
    if !(base && n > 3) {
        for (id, s) in [
            ("maximal-class-range", S),
            ("maximal-class-b-p", S2),
            ("maximal-class-b-large", S3),
        ] {
            cx.na(id, s, "needs a maximal class odd p-group of order > p³");
        }
    } else {
        match cx.cls.is_normally_monomial {
            Some(true) => {
                let cods: Vec<u64> = cx.sums(|cx, w| w.members.iter().map(|&x| cx.cods[x]).sum());
                let single = cx.witnesses().iter().all(|w| w.members.len() == 1);
                match &cx.cls.abelian_normal_index_b {
                    None => cx.na(
                        "maximal-class-range",
                        S,
                        "abelian normal subgroups undetermined (subgroup budget)",
                    ),
                    Some(exps) => {
                        let ok = single
                            && cods.iter().all(|&cod| c * p <= b * cod)
                            && b * p <= c
                            && exps.iter().any(|&e| c <= b * e);
                        cx.verdict(
                            "maximal-class-range",
                            S,
                            ok,
                            format!("c = {c}, b = {b}, cod {cods:?}, exp(A) over {exps:?}"),
                        );
                    }
                }
                if b == p && n as u64 <= p + 1 {
                    cx.verdict(
                        "maximal-class-b-p",
                        S2,
                        c == p * p || c == p * p * p,
                        format!("c = {c}"),
                    );
                } else {
                    cx.na("maximal-class-b-p", S2, &format!("b = {b}, n = {n}"));
                }
                if b > p {
                    let ed = cx.cls.derived_exponent;
                    let mut ok = b * p <= c && c <= b * ed;
                    if n as u64 <= p + 1 {
                        ok &= c == b * p;
                    }
                    cx.verdict(
                        "maximal-class-b-large",
                        S3,
                        ok,
                        format!("c = {c}, b = {b}, exp(G') = {ed}"),
                    );
                } else {
                    cx.na(
                        "maximal-class-b-large",
                        S3,
                        &format!("b = {b} is not above p"),
                    );
                }
            }
            other => {
                let why = if other.is_none() {
                    "normal monomiality undetermined (subgroup budget)"
                } else {
                    "G is not normally monomial"
                };
                for (id, s) in [
                    ("maximal-class-range", S),
                    ("maximal-class-b-p", S2),
                    ("maximal-class-b-large", S3),
                ] {
                    cx.na(id, s, why);
                }
            }
        }
    }
    let cd = &cx.cls.degree_set;
    let hyp = base && n as u64 <= p + 1 && cd.len() == 3 && cd[1] == p && cd[2] > p;
    if !hyp {
        cx.na(
            "maximal-class-three-degrees",
            S4,
            &format!(
                "maximal class: {}, n = {n}, cd = {cd:?}",
                cx.cls.is_maximal_class
            ),
        );
    } else {
        let pb = cd[2];
        cx.verdict(
            "maximal-class-three-degrees",
            S4,
            c == pb * p || c == pb * p * p,
            format!("c = {c}, p^b = {pb}"),
        );
    }
}

fn gvz(cx: &mut Ctx, ford: &mut FordCache, in_t: Option<bool>) {
    const S1: &str = "GVZ (p odd): |ker λ_χ| = χ(1)·|ker χ| for every irreducible, and G ∈ 𝒯";
    const S2: &str = "GVZ: c(G) = Σ cod(χ) for every optimal witness";
    const S3: &str = "GVZ with cyclic center: c(G) = |G/Z(G)|^(1/2)·|Z(G)|";
    const S4: &str = "VZ: c(G) = Σ cod(χ) for every optimal witness";
    if !(cx.cls.is_gvz && cx.p > 0) {
        for (id, s) in [
            ("gvz-ford-kernel", S1),
            ("gvz-codegree-sum", S2),
            ("gvz-cyclic-center", S3),
        ] {
            cx.na(id, s, "G is not a GVZ p-group");
        }
    } else {
        if cx.odd {
            let reps: Vec<usize> = cx.a.galois.orbits.iter().map(|o| o.rep()).collect();
            let mut bad = Vec::new();
            let mut err = None;
            for x in reps {
                match ford.get(cx.a, x) {
                    Ok(pair) => {
                        if pair.a_value != cx.a.table.degree(x) {
                            bad.push(x);
                        }
                    }
                    Err(e) => {
                        err = Some(e);
                        break;
                    }
                }
            }
            match err {
                Some(e @ Error::NoFordPair(_)) => {
                    cx.verdict("gvz-ford-kernel", S1, false, undetermined(&e))
                }
                Some(e) => cx.na("gvz-ford-kernel", S1, &undetermined(&e)),
                None => {
                    let ok = bad.is_empty() && in_t == Some(true);
                    cx.verdict(
                        "gvz-ford-kernel",
                        S1,
                        ok,
                        format!("mismatches {bad:?}, in 𝒯: {in_t:?}"),
                    );
                }
            }
        } else {
            cx.na("gvz-ford-kernel", S1, "needs odd p");
        }
        let sums = cx.sums(|cx, w| cx.sum_cod(w));
        let ok = sums.iter().all(|&s| s == cx.c);
        cx.verdict(
            "gvz-codegree-sum",
            S2,
            ok,
            format!("c = {}, Σcod {sums:?}", cx.c),
        );
        if cx.cls.center_cyclic {
            let target = sqrt_times_center(cx);
            cx.verdict(
                "gvz-cyclic-center",
                S3,
                target == Some(cx.c),
                format!("c = {}, formula {target:?}", cx.c),
            );
        } else {
            cx.na("gvz-cyclic-center", S3, "center is not cyclic");
        }
    }
    if !(cx.cls.is_vz && cx.p > 0) {
        cx.na("vz-codegree-sum", S4, "G is not a VZ p-group");
    } else {
        let sums = cx.sums(|cx, w| cx.sum_cod(w));
        let ok = sums.iter().all(|&s| s == cx.c);
        cx.verdict(
            "vz-codegree-sum",
            S4,
            ok,
            format!("c = {}, Σcod {sums:?}", cx.c),
        );
    }
}

fn cm(cx: &mut Ctx) {
    const S0: &str =
        "CM_(p−1) iff GVZ with |Z(χ):ker χ| = p for χ ≠ 1, iff GVZ with values in Q(ω_p)";
    const S1: &str = "CM_(p−1): cod(χ) = p·χ(1) for every χ ≠ 1";
    const S2: &str = "CM_(p−1): c(G) = p·Σχ(1) = Σcod(χ) for every optimal witness";
    const S3: &str =
        "CM_(p−1): all optimal witnesses have the same number of members of each degree";
    if cx.p == 0 {
        for (id, s) in [
            ("cm-equivalence", S0),
            ("cm-codegrees", S1),
            ("cm-degree-sum", S2),
            ("cm-degree-counts", S3),
        ] {
            cx.na(id, s, "needs a p-group");
        }
        return;
    }
    let l = cx.cls.is_cm_p_minus_1;
    let m = cx.cls.is_gvz && cx.cls.center_kernel_index_p;
    let r = cx.cls.is_gvz && cx.cls.values_in_p_cyclotomic;
    cx.verdict(
        "cm-equivalence",
        S0,
        l == m && m == r,
        format!("CM_(p−1): {l}, GVZ+index p: {m}, GVZ+Q(ω_p): {r}"),
    );
    if !l {
        for (id, s) in [
            ("cm-codegrees", S1),
            ("cm-degree-sum", S2),
            ("cm-degree-counts", S3),
        ] {
            cx.na(id, s, &format!("CM bound {} exceeds p−1", cx.cls.cm_bound));
        }
        return;
    }
    let p = cx.p;
    let t = &cx.a.table;
    let bad: Vec<usize> = (1..t.len())
        .filter(|&i| cx.cods[i] != p * t.degree(i))
        .collect();
    cx.verdict(
        "cm-codegrees",
        S1,
        bad.is_empty(),
        format!("cod set {:?}, mismatches {bad:?}", cx.cls.cod_set),
    );
    let ok = cx.witnesses().iter().all(|w| {
        let deg: u64 = w.members.iter().map(|&x| t.degree(x)).sum();
        cx.c == p * deg && cx.c == cx.sum_cod(w)
    });
    cx.verdict("cm-degree-sum", S2, ok, format!("c = {}", cx.c));
    let profiles: Vec<Vec<u64>> = cx
        .witnesses()
        .iter()
        .map(|w| cx.degree_profile(w))
        .collect();
    let ok = profiles.windows(2).all(|w| w[0] == w[1]);
    cx.verdict(
        "cm-degree-counts",
        S3,
        ok,
        format!("degree profiles {profiles:?}"),
    );
}
