//! Burnside quotient data for a few catalog links.
use linkforge::burnside::burnside_report;
use linkforge::catalog::catalog;

fn main() -> linkforge::Result<()> {
    let cases = [
        ("T_5", 3),
        ("T_6", 3),
        ("chen_braid", 3),
        ("parallel_borromean", 3),
        ("9_40", 5),
        ("9_49", 5),
        ("closure_(σ1σ2)^6", 5),
        ("closure_(σ1σ2)^6", 7),
    ];
    for (name, p) in cases {
        let r = burnside_report(&catalog(name)?, p)?;
        let order = r.order_exponent.map(|e| format!("  |B| = {p}^{e}")).unwrap_or_default();
        println!("{name:>20} p={p} dims={:?} reference={:?} obstruction={}{order}", r.dims, r.reference_dims, r.obstruction);
    }
    Ok(())
}
