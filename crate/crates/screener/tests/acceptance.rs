//! Runs every acceptance criterion and prints one line per criterion.

fn main() {
    let outcomes = screener::fixtures::run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("{} of {} criteria pass", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
