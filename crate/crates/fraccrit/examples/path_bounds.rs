//! Closed-form path extension bounds against the LP.
//!
//! Run: `cargo run --release --example path_bounds`

use fraccrit::coloring::{path_extension_bound, PathBound};

fn main() {
    for k in 1..=5usize {
        for bits in 0..(1usize << (k - 1)) {
            let inner: Vec<u8> = (0..k - 1)
                .map(|i| if bits >> i & 1 == 1 { 3 } else { 2 })
                .collect();
            let (kind, bound) = path_extension_bound(k, &inner);
            let what = match kind {
                PathBound::Intersection => "|phi(v0) /\\ phi(vk)|",
                PathBound::Union => "|phi(v0) \\/ phi(vk)|",
            };
            println!("k={} inner={:?}: extends iff {} <= {}", k, inner, what, bound);
        }
    }
}
