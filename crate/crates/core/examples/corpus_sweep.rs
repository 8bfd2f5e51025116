//! c(G) against the codegree sum across the bundled corpus.

use qpdeg::codegree::codegrees;
use qpdeg::corpus::{corpus, Tier};
use qpdeg::pcparse::parse_group;
use qpdeg::quasiperm::Budget;
use qpdeg::Analysis;

fn main() -> qpdeg::Result<()> {
    let extended = std::env::args().any(|a| a == "--extended");
    println!(
        "{:<20} {:>6} {:>5} {:>8} {:>12}",
        "group", "order", "c", "expected", "min sum cod"
    );
    for e in corpus() {
        if e.tier == Tier::Slow || (e.tier == Tier::Extended && !extended) {
            continue;
        }
        let a = Analysis::run(parse_group(&e.text)?.realize(20000)?, &Budget::default())?;
        let cods = codegrees(&a.table)?;
        let sum = a
            .solver
            .witnesses
            .iter()
            .map(|w| w.members.iter().map(|&i| cods[i]).sum::<u64>())
            .min()
            .unwrap_or(0);
        let expected = e.expected_c.map_or("-".to_string(), |x| x.to_string());
        println!(
            "{:<20} {:>6} {:>5} {:>8} {:>12}",
            e.name,
            e.order,
            a.c(),
            expected,
            sum
        );
    }
    Ok(())
}
