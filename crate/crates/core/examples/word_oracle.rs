//! Brute-force rewriting in the free algebra, checked against the PBW engine.

use duha::cli::resolve_preset;
use duha::pbw::Monomial;
use duha::wordoracle::{to_pbw_element, Rewriter, Strategy, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let case = resolve_preset("f2-root-3")?;
    let a = case.algebra();
    let rw = Rewriter::for_algebra(a);
    let w = Word::parse("ddudduu").expect("letters u and d");
    let left = rw.clone().with_strategy(Strategy::Leftmost).reduce_word(&w);
    let right = rw
        .clone()
        .with_strategy(Strategy::Rightmost)
        .reduce_word(&w);
    println!("{w} -> {left}");
    println!("strategies agree: {}", left == right);

    let (x, y) = (Monomial::new(1, 1, 2), Monomial::new(2, 0, 1));
    let words = a.word_expansion(x).concat(&a.word_expansion(y));
    let oracle = to_pbw_element(&rw.reduce_combination(&words), a);
    println!("{x} · {y} = {}", a.mono_product(x, y));
    println!("oracle agrees: {}", oracle == a.mono_product(x, y));
    Ok(())
}
