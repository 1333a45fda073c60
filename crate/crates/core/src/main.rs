use std::process::exit;

fn main() {
    exit(gapset::cli::run());
}
