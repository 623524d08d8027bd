//! Jack polynomials of one weight by Gram-Schmidt, checked against the
//! eigenvectors of the Hamiltonian and the hook-product norm.

use csm_exact::symfunc::{inner_product_psum, jacks_from_sector, JackBasis};
use csm_exact::Coupling;

fn main() -> csm_exact::Result<()> {
    let weight: usize = std::env::args().nth(1).and_then(|w| w.parse().ok()).unwrap_or(4);
    let coupling = Coupling::Symbolic;
    let basis = JackBasis::new(weight, &coupling)?;
    let from_h = jacks_from_sector(weight, &coupling, weight)?;

    for jack in basis.jacks.iter().rev() {
        println!("J{}", jack.label);
        for (p, c) in jack.coeffs.iter().rev() {
            println!("    m{p}: {c}");
        }
        let f = jack.as_symfunc();
        let norm = inner_product_psum(&f, &f, &coupling)?;
        let hooks = jack.label.hook_products(&coupling)?.norm;
        let eigen = from_h.iter().find(|j| j.label == jack.label).map(|j| j == jack);
        println!("    <J,J> = {norm}");
        println!("    hook product matches: {}, eigenvector matches: {:?}", norm == hooks, eigen);
    }
    Ok(())
}
