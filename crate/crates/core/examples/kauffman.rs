//! Kauffman polynomial and its value at the golden point.
use linkforge::catalog::catalog;
use linkforge::skein::{decompose, eval_phi5, kauffman_normalized};

fn main() -> linkforge::Result<()> {
    println!("F(4_1) = {}", kauffman_normalized(&catalog("4_1")?)?);
    for name in ["unknot", "T_3", "hopf", "3_1", "4_1", "7_4", "9_40", "9_49", "borromean"] {
        let g = eval_phi5(&catalog(name)?)?;
        let dec = decompose(g)?;
        println!("{name:>10}  F = {g:<12} = {}·√5^{}", dec.epsilon, dec.lambda);
    }
    Ok(())
}
