//! Driving the command line entry point in-process.

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = newton_segre::cli::run(
        ["segre", "excess", "--ideal", "x1*x2, x1*x3, x2*x3", "--degrees", "2,2,2", "--format", "json"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    println!("exit code {code}");
}
