//! Fox colorings and determinants.
use linkforge::catalog::catalog;
use linkforge::coloring::{coloring_space, determinant, homology_factors};

fn main() -> linkforge::Result<()> {
    for name in ["3_1", "4_1", "9_49", "whitehead", "borromean"] {
        let d = catalog(name)?;
        let det = determinant(&d);
        let h: Vec<String> = homology_factors(&d).iter().map(|f| f.to_string()).collect();
        print!("{name:>10}  det={det:<4} H1(double cover)=[{}]", h.join(","));
        for k in [3, 4, 5, 7] {
            print!("  col_{k}={}", coloring_space(&d, k)?.factored());
        }
        println!();
    }
    Ok(())
}
