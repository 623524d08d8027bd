//! Triangular Hamiltonian of a family, its eigenvalues read off the
//! diagonal, and back-substitution eigenvectors with symbolic `A`.

use csm_exact::operator::h_matrix;
use csm_exact::spectrum::{all_eigenpairs, degenerate_couplings, residual};
use csm_exact::states::enumerate_sector;
use csm_exact::Coupling;

fn main() -> csm_exact::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1,0".into());
    let root = csm_exact::cli::parse_state(&arg)?;
    let basis = enumerate_sector(root.n_particles(), root.total(), Some(&root))?;
    let m = h_matrix(&basis, &Coupling::Symbolic)?;

    print!("{}", m.render_text());
    for pair in all_eigenpairs(&m) {
        let pair = pair?;
        println!("\n{}  E = {}", pair.label, pair.energy);
        for (s, c) in pair.vector.iter().rev() {
            println!("    m{s}: {c}");
        }
        assert!(residual(&m, &pair).iter().all(|r| r.is_zero()));
    }
    println!("\nA values where two diagonal entries meet: {:?}", degenerate_couplings(&m)
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>());
    Ok(())
}
