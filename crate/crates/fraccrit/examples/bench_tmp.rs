use fraccrit::catalog::enumerate_critical;
use fraccrit::egraph::serialize_egraphs;
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let found = enumerate_critical(11, 16).unwrap();
    println!("sanity n<=11: {} in {:?} (expect 24)", found.len(), t.elapsed());
    assert_eq!(found.len(), 24);

    let t = Instant::now();
    let found = enumerate_critical(15, 15).unwrap();
    println!("n<=15: {} critical e-graphs in {:?}", found.len(), t.elapsed());
    let mut by_n = std::collections::BTreeMap::new();
    for g in &found { *by_n.entry(g.n()).or_insert(0usize) += 1; }
    println!("by order: {:?}", by_n);
    std::fs::write("/tmp/obstructions_15.eg", serialize_egraphs(&found).unwrap()).unwrap();
}
