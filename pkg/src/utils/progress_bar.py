import sys


def update_progress_bar(iteration, total, prefix='Progress:', suffix='Complete', decimals=1, length=50, fill='█', printEnd="\r", stream=None):
    """Prints and updates a CLI progress bar on stderr, keeping stdout for results.

    Parameters:

    iteration (int): current iteration

    total (int): total number of iterations

    stream (file) - optional: where to draw; stderr by default
    """
    stream = stream or sys.stderr
    if total == 0:
        return
    percent = ("{0:." + str(decimals) + "f}").format(100 * (iteration / float(total)))
    filledLength = int(length * iteration // total)
    bar = fill * filledLength + '-' * (length - filledLength)
    print('\r%s |%s| %s%% %s' % (prefix, bar, percent, suffix), end=printEnd, file=stream)

    if iteration == total:
        print(file=stream)
