//! Enumerate necessity operators on small powerset algebras and check the
//! 2^(m*m) count identity two independent ways.

use modal_duality::algebra::{
    enumerate_necessity_ops, enumerate_necessity_ops_brute, necessity_op_count,
};

fn main() {
    for m in 0..=3u8 {
        let fast = enumerate_necessity_ops(m).unwrap();
        let expected = necessity_op_count(m).unwrap();
        println!(
            "m = {m}: {} necessity operators via relations (expected 2^(m*m) = {expected})",
            fast.len()
        );
        assert_eq!(fast.len() as u128, expected);
        // The brute-force route scans every unary map and must agree.
        let brute = enumerate_necessity_ops_brute(m).unwrap();
        assert_eq!(brute, fast);
        println!("        brute force over all unary maps agrees");
    }
    // A peek at the m = 1 operators: the identity and the constant top.
    for op in enumerate_necessity_ops(1).unwrap() {
        println!("m = 1 operator table: {}", op.label());
    }
}
