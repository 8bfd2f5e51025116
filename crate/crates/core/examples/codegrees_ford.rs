//! Codegrees, Ford pairs and the codegree form of `c(G)`.

use qpdeg::codegree::{class_t_membership, cod, find_ford_pair, FordCache, DEFAULT_MAX_SUBGROUPS};
use qpdeg::corpus;
use qpdeg::pcparse::parse_group;
use qpdeg::quasiperm::Budget;
use qpdeg::Analysis;

fn main() -> qpdeg::Result<()> {
    let e = corpus::find("codegree-gap-p3")?;
    let a = Analysis::run(parse_group(&e.text)?.realize(5000)?, &Budget::default())?;
    let mut total_cod = 0;
    let mut rhs = 0;
    if let Some(w) = a.solver.witnesses.first() {
        for &chi in &w.members {
            let pair = find_ford_pair(&a, chi, DEFAULT_MAX_SUBGROUPS)?;
            let c = cod(&a.table, chi)?;
            println!(
                "chi_{chi}: deg {}, cod {c}, |H| = {}, o(lambda) = {}, |ker lambda| = {}, a = {}",
                a.table.degree(chi),
                pair.subgroup.order(),
                pair.lambda_order(),
                pair.ker_lambda.order(),
                pair.a_value
            );
            total_cod += c;
            rhs += a.table.degree(chi) * c / pair.a_value;
        }
    }
    println!(
        "c(G) = {}, sum of cod = {total_cod}, sum of chi(1)/a * cod = {rhs}",
        a.c()
    );
    let t = class_t_membership(&a, &mut FordCache::new(DEFAULT_MAX_SUBGROUPS))?;
    println!("in class T: {}", t.member);
    Ok(())
}
