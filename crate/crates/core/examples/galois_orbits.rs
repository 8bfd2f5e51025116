//! Galois orbits of irreducible characters, with `d(χ)` and `m(ξ)`.

use qpdeg::chartab::character_table;
use qpdeg::galois::galois_orbits;
use qpdeg::group::conjugacy_classes;
use qpdeg::pcparse::parse_group;

fn main() -> qpdeg::Result<()> {
    let g = parse_group("p=3; gens a,b,c,d; [b,a]=c")?.realize(5000)?;
    let cd = conjugacy_classes(&g);
    let t = character_table(&g, &cd)?;
    let gd = galois_orbits(&t, &cd)?;
    println!("{} characters in {} Galois orbits", t.len(), gd.len());
    for o in &gd.orbits {
        println!(
            "orbit {:?}: chi(1) = {}, |orbit| = {}, d = {}, m(xi) = {}, |ker| = {}",
            o.members,
            o.degree,
            o.size,
            o.d_value,
            o.m_value,
            t.distinct_kernels()[o.kernel].order()
        );
    }
    Ok(())
}
