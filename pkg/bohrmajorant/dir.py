import os
import appdirs


def get_data_dir():
    return appdirs.user_data_dir('bohrmajorant')


def get_witness_dir(data_dir: str=None):
    if data_dir is None:
        data_dir = get_data_dir()

    return os.path.join(data_dir, 'witnesses')


def get_database_path(data_dir: str=None):
    if data_dir is None:
        data_dir = get_data_dir()

    return os.path.join(data_dir, 'runs.sqlite3')
