//! Bundled group definitions.
//!
//! Commutators follow `[x,y] = x⁻¹y⁻¹xy`. Where a published presentation
//! leaves the orientation implicit, the transcription here was fixed by
//! matching the stated `|Z(G)|`, `cd(G)` and `c(G)`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// Seconds.
    Fast,
    /// Order 3125: minutes in debug builds.
    Extended,
    /// Order 15625.
    Slow,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub text: String,
    pub provenance: String,
    pub order: usize,
    /// Published value of `c(G)`, when known.
    pub expected_c: Option<u64>,
    pub tier: Tier,
}

fn entry(
    name: &str,
    text: &str,
    provenance: &str,
    order: usize,
    expected_c: Option<u64>,
    tier: Tier,
) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        text: text.to_string(),
        provenance: provenance.to_string(),
        order,
        expected_c,
        tier,
    }
}

/// The modular group `M_{p^n} = ⟨a, b | a^{p^{n−1}} = b^p = 1, a^b = a^{1+p^{n−2}}⟩`.
pub fn modular(p: u64, n: u32) -> Result<CorpusEntry> {
    if n < 3 || p < 3 || !crate::chartab::modp::is_prime(p) {
        return Err(Error::NotFound(format!(
            "modular group needs an odd prime p and n ≥ 3 (got p = {p}, n = {n})"
        )));
    }
    let big = p.pow(n - 1);
    let shift = p.pow(n - 2);
    let text = format!("p={p}; gens a,b; a^{big}=1; b^{p}=1; [a,b]=a^{shift}");
    Ok(entry(
        &format!("m-{p}-{n}"),
        &text,
        "modular p-group M_{p^n}: c(G) = p^(n−1) = cod(χ) for its faithful χ",
        p.pow(n) as usize,
        Some(p.pow(n - 1)),
        if p.pow(n) > 5000 {
            Tier::Extended
        } else {
            Tier::Fast
        },
    ))
}

/// Every bundled entry, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut v = vec![
        entry("c3", "perm 3\n(0 1 2)", "cyclic group of order 3", 3, Some(3), Tier::Fast),
        entry(
            "c9",
            "perm 9\n(0 1 2 3 4 5 6 7 8)",
            "cyclic group of order 9",
            9,
            Some(9),
            Tier::Fast,
        ),
        entry(
            "c3xc3",
            "perm 6\n(0 1 2)\n(3 4 5)",
            "elementary abelian group of order 9",
            9,
            Some(6),
            Tier::Fast,
        ),
        entry(
            "extraspecial-27-e3",
            "p=3; gens a,b,c; [b,a]=c",
            "extraspecial group of order 27 and exponent 3 (Heisenberg group mod 3)",
            27,
            Some(9),
            Tier::Fast,
        ),
        entry(
            "extraspecial-27-e9",
            "p=3; gens a,b; a^9=1; b^3=1; [a,b]=a^3",
            "extraspecial group of order 27 and exponent 9",
            27,
            Some(9),
            Tier::Fast,
        ),
        entry(
            "heis27xc3",
            "p=3; gens a,b,c,d; [b,a]=c",
            "extraspecial 27 of exponent 3 times C_3: order p^4 with |Z| = p^2",
            81,
            Some(12),
            Tier::Fast,
        ),
        entry(
            "c3-wr-c3",
            "perm 9\n[1,2,0,3,4,5,6,7,8]\n[3,4,5,6,7,8,0,1,2]",
            "wreath product C_3 wr C_3 (Sylow 3-subgroup of S_9): maximal class, not GVZ",
            81,
            Some(9),
            Tier::Fast,
        ),
        entry(
            "codegree-gap-p3",
            "p=3; gens z,y,x; x^9=1; [x,z]=y; [x,y]=x^3",
            "order p^4 group <x,y,z | x^(p^2) = y^p = z^p = 1, xy = yx^(p+1), xz = zxy, yz = zy> at p = 3: c(G) = p^2 < cod(χ) = p^3",
            81,
            Some(9),
            Tier::Fast,
        ),
        entry(
            "codegree-gap-p5",
            "p=5; gens z,y,x; x^25=1; [x,z]=y; [x,y]=x^5",
            "the same order p^4 presentation at p = 5",
            625,
            None,
            Tier::Fast,
        ),
        entry(
            "phi3-2111e-p3",
            "p=3; gens a,a1,a2,a3; a1^9=1; [a1,a]=a2; [a2,a]=a3",
            "phi_3(2111)e = <a, a1, a2, a3 | [a_i, a] = a_(i+1), a^p = a1^(p^2) = a2^p = a3^p = 1> at p = 3: c(G) = 2p^2",
            243,
            Some(18),
            Tier::Fast,
        ),
        entry(
            "phi3-2111e-p5",
            "p=5; gens a,a1,a2,a3; a1^25=1; [a1,a]=a2; [a2,a]=a3",
            "phi_3(2111)e at p = 5: optimal witnesses {psi_1, chi_1} and {chi_2, chi_3} with codegrees 5^2 and 5^3",
            3125,
            Some(50),
            Tier::Extended,
        ),
        entry(
            "alpha-beta-p5",
            "p=5; gens a1,a2,b,b1,b2; a1^5=b1; a2^5=b2; [a1,a2]=b; [b,a1]=b1; [b,a2]=b2",
            "<alpha_1, alpha_2, beta, beta_1, beta_2> of order 5^5 with alpha_i^5 = beta_i, [alpha_1, alpha_2] = beta, [beta, alpha_i] = beta_i: c(G) = 50 = (1/5)·Σ_nl cod",
            3125,
            Some(50),
            Tier::Extended,
        ),
        entry(
            "metacyclic-5-6",
            "p=5; gens b,a; b^125=1; a^125=1; [a,b]=a^5",
            "metacyclic <a, b | a^125 = b^125 = 1, a^b = a^6> of order 5^6: GVZ, witnesses with different degree profiles, c(G) = 2·5^3",
            15625,
            Some(250),
            Tier::Slow,
        ),
    ];
    for n in 3..=5 {
        v.push(modular(3, n).expect("valid parameters"));
    }
    v
}

/// Looks up an entry; `m-P-N` builds any modular group.
pub fn find(name: &str) -> Result<CorpusEntry> {
    if let Some(rest) = name.strip_prefix("m-") {
        let parts: Vec<&str> = rest.split('-').collect();
        if let [p, n] = parts.as_slice() {
            if let (Ok(p), Ok(n)) = (p.parse::<u64>(), n.parse::<u32>()) {
                return modular(p, n);
            }
        }
    }
    // the bare name refers to the exponent-p group
    let name = if name == "extraspecial-27" {
        "extraspecial-27-e3"
    } else {
        name
    };
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::NotFound(format!("no corpus entry named {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let c = corpus();
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn lookup() {
        assert_eq!(find("m-3-4").unwrap().order, 81);
        assert_eq!(find("extraspecial-27").unwrap().name, "extraspecial-27-e3");
        assert_eq!(find("m-5-3").unwrap().expected_c, Some(25));
        assert!(matches!(find("nope"), Err(Error::NotFound(_))));
        assert!(find("m-4-3").is_err());
    }
}
