//! Pseudo-momenta of every state in a sector and the constant offset between
//! `Σ kⱼ²` and the diagonal energy.

use csm_exact::scalars::rational::parse_rational;
use csm_exact::spectrum::{compare_pseudomomentum_energy, pseudo_momenta};
use csm_exact::states::enumerate_sector;

fn main() -> csm_exact::Result<()> {
    let a = parse_rational(&std::env::args().nth(1).unwrap_or_else(|| "2".into()))?;
    let states = enumerate_sector(3, 4, None)?;
    for s in &states {
        let pm = pseudo_momenta(s, &a)?;
        let k: Vec<String> = pm.k.iter().map(|x| x.to_string()).collect();
        println!("{s}  k·L/π = ({})  Σk² = {}", k.join(", "), pm.energy);
    }
    let report = compare_pseudomomentum_energy(&states, &a)?;
    println!(
        "offset {:?}, predicted {}, matches {}",
        report.constant.map(|c| c.to_string()),
        report.predicted,
        report.matches_prediction
    );
    Ok(())
}
