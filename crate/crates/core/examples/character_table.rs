//! Character table of a small p-group.

use qpdeg::chartab::character_table;
use qpdeg::group::conjugacy_classes;
use qpdeg::pcparse::parse_group;

fn main() -> qpdeg::Result<()> {
    let g = parse_group("p=3; gens a,b; a^9=1; b^3=1; [a,b]=a^3")?.realize(5000)?;
    let cd = conjugacy_classes(&g);
    let t = character_table(&g, &cd)?;
    println!(
        "|G| = {}, {} classes, cd(G) = {:?}",
        g.order(),
        t.len(),
        t.degree_set()
    );
    println!("class sizes: {:?}", t.class_sizes());
    for i in 0..t.len() {
        let row: Vec<String> = (0..t.len()).map(|l| t.value(i, l).to_string()).collect();
        println!(
            "chi_{i:<2} deg {}  |ker| = {:>2}  |Z(chi)| = {:>2}  [{}]",
            t.degree(i),
            t.kernel(i).order(),
            t.char_center(i).order(),
            row.join(", ")
        );
    }
    Ok(())
}
