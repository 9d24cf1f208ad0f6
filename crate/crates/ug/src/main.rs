use clap::Parser;

fn main() {
    let cli = ug::Cli::parse();
    match ug::execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
