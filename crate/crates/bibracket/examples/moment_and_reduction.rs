//! The moment element mu and the bracket it induces on the reduced
//! algebra. For S^1 x S^2 the reduced algebra is Laurent in X and
//! polynomial in Y, with {X,Y} = -X.

use bibracket::bracket::Evaluator;
use bibracket::moment::check_moment;
use bibracket::presets::{s1_x_sn1, sphere_products};
use bibracket::reduce::reduce_H0;
use bibracket::report::all_pass;

fn print_table(m: &bibracket::presets::ModelData, maxlen: usize) {
    let ev = Evaluator::new(&m.alg, &m.bibracket);

    let report = check_moment(&ev, &m.moment, maxlen).unwrap();
    assert!(all_pass(&report));
    println!("moment identities pass up to length {maxlen}");

    let q = m.reduction.as_ref().expect("reduction data");
    let (rb, checks) = reduce_H0(&ev, &m.moment, q, maxlen).unwrap();
    assert!(all_pass(&checks));
    let t = &q.target;
    for i in 0..t.len() {
        for j in 0..t.len() {
            let v = rb.table_entry(i, j).unwrap();
            println!("  {{{},{}}} = {}", t.gen(i).name, t.gen(j).name, v.display(t));
        }
    }
}

fn main() {
    println!("S^1 x S^2:");
    print_table(&s1_x_sn1(3), 3);

    println!("S^2 x S^3:");
    print_table(&sphere_products(&[(2, 3)]), 3);
}
