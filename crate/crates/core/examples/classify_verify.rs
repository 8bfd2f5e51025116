//! Structural flags and the identity checks for one group.

use qpdeg::codegree::{classify, verify_identities, Status, DEFAULT_MAX_SUBGROUPS};
use qpdeg::corpus;
use qpdeg::pcparse::parse_group;
use qpdeg::quasiperm::Budget;
use qpdeg::Analysis;

fn main() -> qpdeg::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "extraspecial-27-e3".into());
    let e = corpus::find(&name)?;
    let a = Analysis::run(parse_group(&e.text)?.realize(20000)?, &Budget::default())?;
    let cls = classify(&a, DEFAULT_MAX_SUBGROUPS)?;
    println!(
        "{name}: GVZ {} VZ {} maximal class {} kernel chain {} CM_(p-1) {} normally monomial {:?}",
        cls.is_gvz,
        cls.is_vz,
        cls.is_maximal_class,
        cls.kernels_chain,
        cls.is_cm_p_minus_1,
        cls.is_normally_monomial
    );
    let v = verify_identities(&a, &cls, DEFAULT_MAX_SUBGROUPS)?;
    for c in &v.checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a ",
            Status::Notice => "note",
        };
        println!("  [{tag}] {:<30} {}", c.id, c.detail);
    }
    Ok(())
}
