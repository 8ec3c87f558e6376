fn main() {
    println!("acf");
}
