//! Parse diagrams from PD records, braids and the catalog.
use linkforge::catalog::{catalog, names};
use linkforge::{BraidWord, Diagram};

fn main() -> linkforge::Result<()> {
    let trefoil = Diagram::parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n")?;
    println!("trefoil: {} crossings, writhe {}", trefoil.crossing_count(), trefoil.writhe());

    let w: BraidWord = "BR 3: 1 -2 1 -2 1 -2".parse()?;
    let borromean = w.closure();
    println!("{w} closes to {} components", borromean.components());
    println!("linking matrix mod 2: {:?}", borromean.linking_matrix_mod2()?);

    for name in names().iter().filter(|n| *n != "T_n") {
        let d = catalog(name)?;
        println!("{name:>20}  c={:<3} components={}", d.crossing_count(), d.components());
    }
    Ok(())
}
