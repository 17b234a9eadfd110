//! Replay move certificates and turn them into unknotting bounds.
use linkforge::bounds::BoundReport;
use linkforge::catalog::catalog;
use linkforge::moves::{verify_certificate, MoveCertificate};

fn main() -> linkforge::Result<()> {
    for name in ["7_4", "8_8", "8_16"] {
        let path = format!("{}/data/certificates/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).expect("bundled certificate");
        let cert = MoveCertificate::from_json_str(&text)?;
        let rep = verify_certificate(&cert)?;
        println!("{name}: {} steps {:?}", rep.steps, rep.move_counts);
        let bounds = BoundReport::for_diagram(name, &catalog(name)?)?.with_certificate(&catalog(name)?, &cert)?;
        for b in &bounds.bounds {
            println!("    {:?} bound {}", b.source, b.value);
        }
        println!("    best {}", bounds.best);
    }
    Ok(())
}
