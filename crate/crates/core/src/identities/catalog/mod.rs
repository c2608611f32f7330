use super::Check;

mod basics;
mod classical;
mod main;
mod qlemmas;
mod reciprocity;
mod series;
mod skewing;
mod summation;
mod tzero;

/// Every registered check, in a fixed order.
pub fn builtin_catalog() -> Vec<Check> {
    let mut all = Vec::new();
    all.extend(qlemmas::checks());
    all.extend(basics::checks());
    all.extend(series::checks());
    all.extend(main::checks());
    all.extend(reciprocity::checks());
    all.extend(skewing::checks());
    all.extend(classical::checks());
    all.extend(summation::checks());
    all.extend(tzero::checks());
    all
}
