// Exhaustive level-16 catalog search, streaming finds to disk.
use fraccrit::catalog::enumerate_critical;
use fraccrit::egraph::serialize_egraphs;
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let found = enumerate_critical(16, 16).unwrap();
    println!("n<=16: {} critical e-graphs in {:?}", found.len(), t.elapsed());
    let mut by_n = std::collections::BTreeMap::new();
    for g in &found { *by_n.entry(g.n()).or_insert(0usize) += 1; }
    println!("by order: {:?}", by_n);
    std::fs::write("/tmp/obstructions_16.eg", serialize_egraphs(&found).unwrap()).unwrap();
}
