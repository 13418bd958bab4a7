import os

from bohrmajorant.dir import get_database_path

if __name__ == '__main__':
    os.unlink(get_database_path())
