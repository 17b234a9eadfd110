//! Flip a 3-rotor inside a stator and compare invariants.
use linkforge::coloring::col;
use linkforge::moves::{is_n_rotor, rotor_flip};
use linkforge::skein::kauffman_normalized;
use linkforge::Tangle;

fn main() -> linkforge::Result<()> {
    // the central triangle of the standard trefoil, six boundary points
    let rotor = Tangle::from_json(&serde_json::json!({
        "crossings": [[1, 2, 3, 4], [5, 1, 6, 7], [2, 5, 8, 9]],
        "boundary": [3, 4, 6, 7, 8, 9],
    }))?;
    let a = Tangle::elementary(3, 0, true)?;
    let b = Tangle::elementary(3, 1, false)?;
    let c = Tangle::elementary(3, 0, false)?;
    let stator = [a.clone(), b.clone(), c.clone(), b, c].iter().try_fold(a, |t, x| t.compose(x))?;
    println!("rotor symmetric: {}, stator symmetric: {}", is_n_rotor(&rotor), is_n_rotor(&stator));

    let before = rotor.glue(&stator)?;
    let after = rotor_flip(&stator, &rotor)?;
    println!("crossings {} / {}", before.crossing_count(), after.crossing_count());
    println!("F before: {}", kauffman_normalized(&before)?);
    println!("F after:  {}", kauffman_normalized(&after)?);
    for k in [3, 5, 7] {
        println!("col_{k}: {} / {}", col(&before, k), col(&after, k));
    }
    Ok(())
}
