//! Exact arithmetic on para-reals xt + xb b + xn n.

use bzfc::arith::eval_parareal;
use bzfc::parareal::ParaReal;

fn main() {
    let x = ParaReal::from_ints(3, -1, 2);
    let y = ParaReal::from_ints(1, 1, 0);
    println!("x = {x}, y = {y}");
    println!("x + y = {}", &x + &y);
    println!("x * y = {}", &x * &y);
    println!("x - y = {}", &x - &y);
    match x.inv() {
        Ok(inv) => println!("1/x = {inv}, x * (1/x) = {}", &x * &inv),
        Err(e) => println!("1/x: {e}"),
    }
    println!("1/(1 - b): {}", eval_parareal("1 / (1 - b)").unwrap_err());
    println!("b * b = {}", eval_parareal("b * b").unwrap());
    println!("b * n = {}", eval_parareal("b * n").unwrap());
}
