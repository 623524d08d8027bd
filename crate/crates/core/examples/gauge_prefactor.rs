//! The gauge prefactor relating the original and transformed wavefunctions,
//! on both branches of `A(λ)`.

use csm_exact::scalars::coupling_from_lambda;
use csm_exact::spectrum::gauge_prefactor_eval;
use csm_exact::Branch;

fn main() -> csm_exact::Result<()> {
    let x = [0.05, 0.3, 0.7];
    for lambda in [0.5, 1.0, 3.0] {
        for branch in [Branch::Plus, Branch::Minus] {
            let c = coupling_from_lambda(lambda, branch);
            let g = gauge_prefactor_eval(&x, lambda, branch, 1.0)?;
            println!(
                "λ={lambda} {branch}: A={:.4} β={:.4}  prefactor = {:.6} {:+.6}i  |·| = {:.6}",
                c.a, c.beta, g.re, g.im, g.modulus
            );
        }
    }
    Ok(())
}
