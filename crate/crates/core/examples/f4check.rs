use balanced_ideals::ideals::{self, EnumerateOptions, IdealSet};
use balanced_ideals::parabolic::Quotient;
use balanced_ideals::*;
use std::sync::Arc;

fn main() {
    let g = Arc::new(GroupTable::enumerate(RootSystem::new(CoxeterDiagram::parse("F4").unwrap())).unwrap());
    let full = SimpleSet::full(4);
    eprintln!("building trivial quotient...");
    let trivial = Quotient::new(g.clone(), full, full).unwrap();
    let all = ideals::enumerate_balanced(&trivial, &EnumerateOptions { list: true, ..Default::default() }).unwrap();
    println!("full F4 count: {}", all.count);
    let _ = std::io::Write::flush(&mut std::io::stdout());
    let theta = SimpleSet::from_indices([0, 1]);
    for eta_digits in ["134", "124"] {
        let eta = SimpleSet::from_indices(eta_digits.chars().map(|c| c.to_digit(10).unwrap() as usize - 1));
        // Route 1: direct quotient enumeration.
        let q = Quotient::new(g.clone(), theta, eta).unwrap();
        let direct = ideals::enumerate_balanced(&q, &EnumerateOptions::default()).unwrap().count;
        // Route 2: invariance filter on the full-group listing.
        let filtered = all.reports.iter().filter(|r| {
            theta.complement(4).is_subset(&r.left_invariance.unwrap())
                && eta.complement(4).is_subset(&r.right_invariance.unwrap())
        }).count();
        // Route 3: brute force when the quotient is small enough.
        let brute = if q.num_cosets() <= 22 {
            let n = q.num_cosets();
            let mut count = 0u64;
            for mask in 0u64..1 << n {
                let set = IdealSet::from_cosets(&q, (0..n as u32).filter(|&c| mask >> c & 1 == 1));
                if ideals::is_balanced(&q, &set).unwrap() { count += 1; }
            }
            Some(count)
        } else { None };
        println!("eta {}: cosets {}, direct {}, invariance-filter {}, brute {:?}",
                 eta_digits, q.num_cosets(), direct, filtered, brute);
    }
}
