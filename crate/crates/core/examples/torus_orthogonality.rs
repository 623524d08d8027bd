//! Constant-term scalar product of Jack polynomials in N variables at
//! integer coupling, against the closed form.

use csm_exact::partitions::partitions_with_max_len;
use csm_exact::scalars::rational::int;
use csm_exact::symfunc::{verify_torus_with, JackBasis};
use csm_exact::Coupling;

fn main() -> csm_exact::Result<()> {
    let n = 3;
    for a in [1, 2] {
        for weight in 0..=3 {
            let basis = JackBasis::new(weight, &Coupling::fixed(int(a)))?;
            let labels = partitions_with_max_len(weight, n);
            for k in &labels {
                for m in &labels {
                    let r = verify_torus_with(&basis, k, m, n)?;
                    println!("A={a} N={n} <J{k}, J{m}> = {:>8}  expected {:>8}  {}", r.lhs, r.rhs, if r.matches { "ok" } else { "MISMATCH" });
                }
            }
        }
    }
    Ok(())
}
