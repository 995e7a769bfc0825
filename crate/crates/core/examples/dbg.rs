use zetalab_core::budget::PrecisionBudget;
use zetalab_core::{eval_zeta, eval_zeta_prime, Complex};

fn main() {
    let b = PrecisionBudget::new(128, 1e-30, 32).unwrap();
    let r = eval_zeta(&Complex::real(160, 2.0), &b);
    match r {
        Ok(v) => println!("zeta(2) = {}  bound={:e} (pi^2/6 = 1.6449340668482264364724151666460251892)", v.value, v.abs_error_bound),
        Err(e) => println!("err: {e}"),
    }
    let r = eval_zeta(&Complex::real(160, 0.0), &b);
    match r {
        Ok(v) => println!("zeta(0) = {} bound={:e}", v.value, v.abs_error_bound),
        Err(e) => println!("err: {e}"),
    }
    let r = eval_zeta_prime(&Complex::real(160, 2.0), &b);
    match r {
        Ok(v) => println!("zeta'(2) = {} bound={:e} (expect -0.9375482543158437537)", v.value, v.abs_error_bound),
        Err(e) => println!("err: {e}"),
    }
    let r = eval_zeta(&Complex::from_f64(160, 0.5, 30.0), &b);
    match r {
        Ok(v) => println!("zeta(0.5+30i) = {} bound={:e}", v.value, v.abs_error_bound),
        Err(e) => println!("err: {e}"),
    }
}
