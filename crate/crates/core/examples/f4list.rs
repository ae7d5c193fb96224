use balanced_ideals::ideals::{self, EnumerateOptions};
use balanced_ideals::parabolic::Quotient;
use balanced_ideals::*;
use std::sync::Arc;

fn main() {
    let g = Arc::new(GroupTable::enumerate(RootSystem::new(CoxeterDiagram::parse("F4").unwrap())).unwrap());
    let full = SimpleSet::full(4);
    let q = Quotient::new(g.clone(), full, full).unwrap();
    eprintln!("quotient done, counting...");
    let c = ideals::enumerate_balanced(&q, &EnumerateOptions::default()).unwrap();
    println!("count: {}", c.count);
    eprintln!("now list mode...");
    let l = ideals::enumerate_balanced(&q, &EnumerateOptions { list: true, ..Default::default() }).unwrap();
    println!("listed: {}", l.reports.len());
}
