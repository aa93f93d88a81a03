from geomitosis.cli import main

main()
