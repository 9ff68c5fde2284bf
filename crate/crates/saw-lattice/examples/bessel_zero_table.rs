//! Zeros of J_1: table construction, the pi-spacing asymptotic, and the
//! CSV audit dump.
//!
//! Run with: cargo run --release --example bessel_zero_table

use saw_lattice::special::BesselZeroTable;

fn main() -> saw_lattice::Result<()> {
    let table = BesselZeroTable::build(1.0, 20)?;
    println!("first zeros of J_1 and their spacings:");
    for (i, z) in table.zeros.iter().enumerate() {
        let spacing = if i > 0 {
            format!("{:+.6}", z - table.zeros[i - 1])
        } else {
            String::new()
        };
        println!("  j_{:<2} = {z:.10}  {spacing}", i + 1);
    }
    let last_gap = table.zeros[19] - table.zeros[18];
    println!(
        "\nspacing approaches pi = {:.10} (last gap {last_gap:.10})",
        std::f64::consts::PI
    );

    let mut csv = Vec::new();
    table.write_csv(&mut csv)?;
    println!("\nCSV dump (first lines):");
    for line in String::from_utf8_lossy(&csv).lines().take(4) {
        println!("  {line}");
    }
    Ok(())
}
