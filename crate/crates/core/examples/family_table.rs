//! Mother/daughter association and weighted transitions of the |6,4,3,1⟩ family.
//!
//! `cargo run --example family_table -- 5,3,1`

use csm_exact::states::build_squeeze_graph;
use csm_exact::SectorState;

fn main() -> csm_exact::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "6,4,3,1".into());
    let root = csm_exact::cli::parse_state(&arg)?;
    let graph = build_squeeze_graph(&root);

    print!("{}", graph.render_levels());
    println!();
    print!("{}", graph.render_association_table());
    println!();
    print!("{}", graph.render_weight_table());

    let bottom: &SectorState = &graph.nodes.last().expect("nonempty family").state;
    println!("\n{} states; irreducible bottom {bottom}", graph.nodes.len());
    Ok(())
}
