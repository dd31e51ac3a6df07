//! Size comparison of sets, by closed form and by brute-force search.

use bzfc::ncset::NCSet;
use bzfc::numerosity::{cong_tv, preceq_tv};
use bzfc::oracle::{cong_brute, preceq_brute};

fn main() {
    let pairs = [
        ("<{a,b}|{c}|{d}>", "<{a,b}|{c}|{d}>"),
        ("{a}", "{b,c}"),
        ("<{}|{a}|{b}>", "<{}|{c}|{d}>"),
        ("<{a}|{}|{}>", "<{}|{}|{b}>"),
    ];
    for (a, b) in pairs {
        let (a, b): (NCSet, NCSet) = (a.parse().unwrap(), b.parse().unwrap());
        println!(
            "{a} vs {b}: cong {} (brute {}), preceq {} (brute {})",
            cong_tv(&a, &b),
            cong_brute(&a, &b).unwrap(),
            preceq_tv(&a, &b),
            preceq_brute(&a, &b).unwrap()
        );
    }
}
