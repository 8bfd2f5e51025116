//! Minimal faithful quasi-permutation degree with every optimal witness.

use qpdeg::corpus;
use qpdeg::pcparse::parse_group;
use qpdeg::quasiperm::Budget;
use qpdeg::Analysis;

fn main() -> qpdeg::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "phi3-2111e-p3".into());
    let e = corpus::find(&name)?;
    let g = parse_group(&e.text)?.realize(20000)?;
    let a = Analysis::run(g, &Budget::default())?;
    let s = &a.solver;
    println!("{name}: c(G) = {}", a.c());
    println!(
        "  fast route {:?}, general route {}, {} kernel families",
        s.fast, s.general, s.families
    );
    for w in &s.witnesses {
        let degs: Vec<u64> = w.members.iter().map(|&i| a.table.degree(i)).collect();
        println!(
            "  witness {:?} degrees {:?} kernels {:?}: xi(1) = {} + m = {} -> {}",
            w.members, degs, w.kernel_orders, w.xi_degree, w.m_value, w.total
        );
    }
    Ok(())
}
