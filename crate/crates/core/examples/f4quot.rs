use balanced_ideals::parabolic::Quotient;
use balanced_ideals::*;
use std::sync::Arc;

fn main() {
    let g = Arc::new(GroupTable::enumerate(RootSystem::new(CoxeterDiagram::parse("F4").unwrap())).unwrap());
    eprintln!("table built");
    let full = SimpleSet::full(4);
    let q = Quotient::new(g.clone(), full, full).unwrap();
    println!("cosets: {}", q.num_cosets());
}
