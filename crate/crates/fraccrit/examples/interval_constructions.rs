//! Exact interval-set constructions: the Hall selection for a 5-cycle with
//! three nailed vertices, its slack variant, and the measure-2 selection.
//!
//! Run: `cargo run --release --example interval_constructions`

use fraccrit::hall::{hall_five_cycle, hall_five_cycle_slack, slack_mix, sset_select};
use fraccrit::interval::RatSet;
use fraccrit::rat::Rat;

fn main() {
    let iv = RatSet::interval_i64;
    let s = [iv(0, 7), iv(4, 11), iv(0, 3).union(&iv(7, 11))];
    match hall_five_cycle(&s) {
        Some(phi) => {
            println!("hall_five_cycle:");
            for (i, p) in phi.iter().enumerate() {
                println!("  phi(v{}) = {} (measure {})", i + 1, p, p.measure());
            }
        }
        None => unreachable!(),
    }

    let too_small = [iv(0, 7), iv(0, 7), iv(0, 11)];
    println!("union below 8: {:?}", hall_five_cycle(&too_small).is_none());

    let a = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::int(5)];
    println!("slack_mix(0,0,0,5) = {:?}", slack_mix(&a));

    let s = [iv(0, 7), iv(0, 6), iv(4, 11)];
    let phi = hall_five_cycle_slack(&s, &[0, 1, 0]).unwrap().unwrap();
    println!(
        "slack variant: phi(v2) leaves S2 by measure {}",
        phi[1].minus(&s[1]).measure()
    );

    let x = sset_select(&iv(0, 4), &iv(1, 5), &iv(6, 11), &iv(5, 6)).unwrap();
    println!("sset_select: X = {} (measure {})", x, x.measure());
}
