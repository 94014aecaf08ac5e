int main(int, char**) { return 3; }
