use balanced_ideals::bruhat::BruhatOrder;
use balanced_ideals::*;

fn main() {
    let g = GroupTable::enumerate(RootSystem::new(CoxeterDiagram::parse("F4").unwrap())).unwrap();
    let order = BruhatOrder::new(&g);
    let n = g.size() as u32;
    let mut trues = 0u64;
    for b in 0..n {
        if b % 128 == 0 { eprintln!("row {b}"); }
        for a in 0..n {
            if order.leq(a, b) { trues += 1; }
        }
    }
    println!("pairs with a <= b: {trues}");
}
