//! Young diagram, conjugate, and per-cell arm/leg statistics of a partition.

use csm_exact::Coupling;

fn main() -> csm_exact::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,2,1".into());
    let p = csm_exact::cli::parse_partition(&arg)?;
    let c = p.conjugate();
    println!("{p}\n{}\n\nconjugate {c}\n{}\n", p.young_diagram(), c.young_diagram());
    for (row, col) in p.cells() {
        let s = p.cell_stats(row, col)?;
        println!(
            "({row},{col}) arm {} leg {} arm colength {} leg colength {}",
            s.arm, s.leg, s.arm_colength, s.leg_colength
        );
    }
    let hooks = p.hook_products(&Coupling::Symbolic)?;
    println!("\nupper hooks {}\nlower hooks {}\nnorm {}", hooks.upper, hooks.lower, hooks.norm);
    let (lhs, rhs) = p.conjugation_identity();
    println!("Σ(i-1)kᵢ = {lhs}, Σ C(k'ⱼ, 2) = {rhs}");
    Ok(())
}
