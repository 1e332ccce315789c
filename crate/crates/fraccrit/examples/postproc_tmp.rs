// Merge the exhaustive <=15 results with closure completion; report counts.
use fraccrit::canon::{canonical_form, canonicalized};
use fraccrit::catalog::{apply_closure, closure_sites, is_critical, ClosureRule};
use fraccrit::egraph::{parse_egraphs, serialize_egraphs, EGraph};
use std::collections::HashMap;
use std::time::Instant;

fn main() {
    let mut members: HashMap<Vec<u8>, EGraph> = HashMap::new();
    for path in ["/tmp/obstructions_15.eg", "/tmp/obstructions_closed.eg"] {
        for g in parse_egraphs(&std::fs::read_to_string(path).unwrap()).unwrap() {
            members.insert(canonical_form(&g), g);
        }
    }
    println!("merged seed: {}", members.len());
    let mut crit_cache: HashMap<Vec<u8>, bool> = HashMap::new();
    loop {
        let t = Instant::now();
        let snapshot: Vec<EGraph> = members.values().cloned().collect();
        let mut added = 0;
        for g in &snapshot {
            for rule in ClosureRule::ALL {
                for site in closure_sites(rule, g) {
                    for r in apply_closure(rule, g, &site).unwrap() {
                        let key = canonical_form(&r);
                        if members.contains_key(&key) {
                            continue;
                        }
                        let crit = *crit_cache.entry(key.clone()).or_insert_with(|| is_critical(&r));
                        if crit {
                            members.insert(key, canonicalized(&r));
                            added += 1;
                        }
                    }
                }
            }
        }
        let by_n: std::collections::BTreeMap<usize, usize> =
            members.values().fold(Default::default(), |mut m, g| { *m.entry(g.n()).or_insert(0) += 1; m });
        println!("round: +{} -> {} in {:?}; by order {:?}", added, members.len(), t.elapsed(), by_n);
        if added == 0 { break; }
    }
    let mut out: Vec<EGraph> = members.into_values().collect();
    out.sort_by_key(|g| (g.n(), canonical_form(g)));
    std::fs::write("/tmp/obstructions_final.eg", serialize_egraphs(&out).unwrap()).unwrap();
    println!("final: {} -> /tmp/obstructions_final.eg", out.len());
}
