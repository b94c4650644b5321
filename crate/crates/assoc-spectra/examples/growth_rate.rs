//! The word family behind exponential spectra: binary words with no
//! prefix 01, no suffix 10, and no factor 101. Counts satisfy a short
//! linear recurrence and grow like a quartic algebraic number.
//! Run with `cargo run --example growth_rate`.

use assoc_spectra::spectrum::{
    alpha_closed_form, alpha_estimate, alpha_root_residual, enumerate_r_words, r_count, RMethod,
};

fn main() {
    println!("the words of length 5:");
    for w in enumerate_r_words(5).expect("n >= 2") {
        print!("  {}", w.as_str());
    }
    println!();

    println!("\nn  |R_n|  ratio to previous");
    let mut prev: Option<u64> = None;
    for n in 2..=16 {
        let by_words = r_count(n, RMethod::Enumerate).expect("n >= 2");
        let by_recurrence = r_count(n, RMethod::Recurrence).expect("n >= 2");
        assert_eq!(by_words, by_recurrence);
        match prev {
            Some(p) => println!("{n:>2}  {by_words:>5}  {:.6}", by_words as f64 / p as f64),
            None => println!("{n:>2}  {by_words:>5}"),
        }
        prev = Some(by_words);
    }

    let alpha = alpha_closed_form();
    println!("\nclosed-form growth constant: {alpha:.10}");
    println!(
        "ratio estimate from the recurrence at n = 60: {:.10}",
        alpha_estimate(60)
    );
    println!(
        "residual of x^4 - x^3 - x^2 - 1 at the constant: {:.3e}",
        alpha_root_residual()
    );
}
