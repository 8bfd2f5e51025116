//! Realizing groups from polycyclic and permutation text.

use qpdeg::pcparse::parse_group;

fn main() -> qpdeg::Result<()> {
    let inputs = [
        ("extraspecial 27, exponent 3", "p=3; gens a,b,c; [b,a]=c"),
        ("modular 81", "p=3; gens a,b; a^27=1; b^3=1; [a,b]=a^9"),
        (
            "C3 wr C3",
            "perm 9\n[1,2,0,3,4,5,6,7,8]\n[3,4,5,6,7,8,0,1,2]",
        ),
    ];
    for (label, text) in inputs {
        let g = parse_group(text)?.realize(5000)?;
        println!(
            "{label:<28} |G| = {:>3}  exp = {:>2}  |Z| = {:>2}  |G'| = {:>2}  class = {:?}",
            g.order(),
            g.exponent(),
            g.center().order(),
            g.derived_subgroup().order(),
            g.nilpotency_class()
        );
    }

    // inconsistent or oversized input is rejected, not truncated
    match parse_group("p=3; gens a,b; a^9=1; b^3=1; [a,b]=a^3")?.realize(10) {
        Err(e) => println!("order budget: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
